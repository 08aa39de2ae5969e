//! Solvability conditions for `Ric(g) = cT` and the constructions behind them.
//!
//! All inequalities are strict: a verdict holds iff `lhs < rhs`. Argmax ties
//! resolve to the lowest block index. Block indices are zero-based.

mod bounds;
mod cad;
mod curves;

pub use bounds::{compactness_bounds, CompactnessBounds};
pub use cad::{cad_interval_so6, cad_membership_so6, CadMembership};
pub use curves::{
    necessary_curve_metric, necessary_curve_scalar, sufficient_curve_metric,
    sufficient_curve_scalar, sufficient_curve_threshold,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::structure::{trace_q, PrescribedTensor, StructureData};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConditionVerdict {
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub witness_index: Option<usize>,
}

impl ConditionVerdict {
    fn strict(lhs: f64, rhs: f64, witness_index: Option<usize>) -> Self {
        Self { holds: lhs < rhs, lhs, rhs, witness_index }
    }
}

/// Index `m` maximizing `kappa_i / T_i` over blocks with kappa > 0, and that ratio.
pub fn dominant_block(sd: &StructureData, t: &PrescribedTensor) -> Result<(usize, f64)> {
    sd.check_len(t.ts().len())?;
    let mut best: Option<(usize, f64)> = None;
    for (i, (b, &ti)) in sd.blocks().iter().zip(t.ts()).enumerate() {
        if b.is_central() {
            continue;
        }
        let ratio = b.kappa / ti;
        if best.is_none_or(|(_, r)| ratio > r) {
            best = Some((i, ratio));
        }
    }
    best.ok_or(Error::NoSimpleBlocks)
}

/// Existence of a global maximum of S on the slice:
/// `kappa_m tr_Q T / T_m < d + d_m - kappa_m d_m`.
pub fn sufficient_condition(sd: &StructureData, t: &PrescribedTensor) -> Result<ConditionVerdict> {
    let (m, ratio) = dominant_block(sd, t)?;
    let bm = sd.blocks()[m];
    let lhs = ratio * trace_q(sd, t)?;
    let rhs = sd.total_dimension() as f64 + bm.d as f64 - bm.kappa * bm.d as f64;
    Ok(ConditionVerdict::strict(lhs, rhs, Some(m)))
}

/// Necessary condition for a solution:
/// `n T_a max kappa_i / T_i < 2 Σ_{kappa_j > 0} d_j (1 - kappa_j) + 2s + n`.
///
/// A failing verdict certifies that no metric in the family solves the equation.
pub fn necessary_condition(sd: &StructureData, t: &PrescribedTensor) -> Result<ConditionVerdict> {
    let (j, ratio) = dominant_block(sd, t)?;
    let n = sd.n() as f64;
    let simple_defect: f64 = sd.blocks().iter().filter(|b| !b.is_central()).map(|b| b.defect()).sum();
    let lhs = n * t.t_a() * ratio;
    let rhs = 2.0 * simple_defect + 2.0 * sd.s() as f64 + n;
    Ok(ConditionVerdict::strict(lhs, rhs, Some(j)))
}

/// Exact criterion when K is simple (`r = 1`, `s = 0`):
/// `n T_a kappa_1 < (2 d_1 (1 - kappa_1) + n) T_1`. The solution is then unique
/// up to scaling.
pub fn simple_k_solvable(sd: &StructureData, t: &PrescribedTensor) -> Result<ConditionVerdict> {
    require_simple_k(sd)?;
    sd.check_len(t.ts().len())?;
    let n = sd.n() as f64;
    let b = sd.blocks()[0];
    let lhs = n * t.t_a() * b.kappa;
    let rhs = (2.0 * b.defect() + n) * t.ts()[0];
    Ok(ConditionVerdict::strict(lhs, rhs, Some(0)))
}

pub(crate) fn require_simple_k(sd: &StructureData) -> Result<()> {
    if sd.r() == 1 && sd.s() == 0 {
        Ok(())
    } else {
        Err(Error::NotSimpleK { r: sd.r(), s: sd.s() })
    }
}
