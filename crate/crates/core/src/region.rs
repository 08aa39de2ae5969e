//! Parameter grids: region charts in `(T_1, T_2)` and scalar-curvature
//! surfaces in `(α_1, α_2)` for two-block structures.
//!
//! Cells are computed independently and returned in row-major order
//! (`t1` outer, `t2` inner), so output does not depend on thread count.

use serde::Serialize;

use crate::catalog::is_so6_diag;
use crate::conditions::{cad_membership_so6, necessary_condition, sufficient_condition, CadMembership};
use crate::curvature::scalar_on_slice;
use crate::error::{Error, Result};
use crate::solver::{classify, par_map, SolveStatus, SolverOptions};
use crate::structure::{PrescribedTensor, StructureData};

/// Evenly spaced samples `lo, ..., hi` (inclusive).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub resolution: usize,
}

impl Axis {
    pub fn new(lo: f64, hi: f64, resolution: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) || resolution < 2 {
            return Err(Error::InvalidTensor { name: "axis".into(), value: lo, reason: "need lo < hi and resolution >= 2" });
        }
        Ok(Self { lo, hi, resolution })
    }

    pub fn spacing(&self) -> f64 {
        (self.hi - self.lo) / (self.resolution - 1) as f64
    }

    pub fn value(&self, i: usize) -> f64 {
        if i + 1 == self.resolution {
            self.hi
        } else {
            self.lo + i as f64 * self.spacing()
        }
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.resolution).map(|i| self.value(i)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CadLabel {
    Inside,
    Outside,
    Empty,
    NotApplicable,
}

impl CadLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CadLabel::Inside => "inside",
            CadLabel::Outside => "outside",
            CadLabel::Empty => "empty",
            CadLabel::NotApplicable => "n/a",
        }
    }
}

impl From<CadMembership> for CadLabel {
    fn from(m: CadMembership) -> Self {
        match m {
            CadMembership::Inside => CadLabel::Inside,
            CadMembership::Outside => CadLabel::Outside,
            CadMembership::Empty => CadLabel::Empty,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionCell {
    pub t1: f64,
    pub t2: f64,
    pub sufficient: bool,
    pub necessary: bool,
    pub cad: CadLabel,
    /// `None` when the scan skipped the solver.
    pub solver: Option<SolveStatus>,
}

fn require_two_blocks(sd: &StructureData) -> Result<()> {
    if sd.len() == 2 {
        Ok(())
    } else {
        Err(Error::ShapeMismatch { expected: 2, found: sd.len() })
    }
}

/// Classifies `T = Q|_a + t1 Q|_{k_1} + t2 Q|_{k_2}`.
pub fn region_cell(sd: &StructureData, t1: f64, t2: f64, opts: Option<&SolverOptions>) -> Result<RegionCell> {
    require_two_blocks(sd)?;
    let t = PrescribedTensor::new(1.0, vec![t1, t2])?;
    let cad = if is_so6_diag(sd) { cad_membership_so6(t1, t2)?.into() } else { CadLabel::NotApplicable };
    let holds = |r: Result<crate::conditions::ConditionVerdict>| match r {
        Ok(v) => Ok(v.holds),
        Err(Error::NoSimpleBlocks) => Ok(false),
        Err(e) => Err(e),
    };
    let (sufficient, necessary, solver) = match opts {
        Some(opts) => {
            let c = classify(sd, &t, opts)?;
            (
                c.sufficient.is_some_and(|v| v.holds),
                c.necessary.is_some_and(|v| v.holds),
                Some(c.outcome.status),
            )
        }
        None => (holds(sufficient_condition(sd, &t))?, holds(necessary_condition(sd, &t))?, None),
    };
    Ok(RegionCell { t1, t2, sufficient, necessary, cad, solver })
}

/// Region chart over a `(T_1, T_2)` grid with `T_a = 1`.
pub fn scan_region(sd: &StructureData, t1: Axis, t2: Axis, opts: Option<&SolverOptions>) -> Result<Vec<RegionCell>> {
    require_two_blocks(sd)?;
    let points: Vec<(f64, f64)> = t1.values().into_iter().flat_map(|a| t2.values().into_iter().map(move |b| (a, b))).collect();
    par_map(points, |(a, b)| region_cell(sd, a, b, opts)).into_iter().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceSample {
    pub alpha1: f64,
    pub alpha2: f64,
    /// `None` outside the feasible set.
    pub scalar: Option<f64>,
}

/// Samples of `S` on the slice as a function of `(α_1, α_2)`.
pub fn sample_surface(sd: &StructureData, t: &PrescribedTensor, a1: Axis, a2: Axis) -> Result<Vec<SurfaceSample>> {
    require_two_blocks(sd)?;
    sd.check_len(t.ts().len())?;
    t.normalized()?;
    let points: Vec<(f64, f64)> = a1.values().into_iter().flat_map(|a| a2.values().into_iter().map(move |b| (a, b))).collect();
    par_map(points, |(alpha1, alpha2)| {
        let scalar = match scalar_on_slice(sd, t, &[alpha1, alpha2]) {
            Ok(s) => Some(s),
            Err(Error::InfeasiblePoint { .. }) | Err(Error::NonPositiveCoefficient { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(SurfaceSample { alpha1, alpha2, scalar })
    })
    .into_iter()
    .collect()
}

/// The four example tensors of the SO(6) chart, with labels.
pub const SO6_EXAMPLES: [(&str, f64, f64); 4] = [
    ("global maximum, sufficient holds", 1.0 / 6.0, 1.0 / 6.0),
    ("necessary fails", 0.1, 0.1),
    ("no critical point", 0.13, 0.16),
    ("global maximum, sufficient fails", 2.0 / 15.0, 2.0 / 15.0),
];
