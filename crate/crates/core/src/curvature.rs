//! Ricci and scalar curvature of naturally reductive metrics, traces, and the
//! scalar curvature restricted to the slice `tr_g T = 1`.
//!
//! With `b_i = d_i (1 - kappa_i)` and `x_i = α_i / α`, the Ricci coefficients
//! relative to Q are
//!
//! ```text
//! ric_i = (kappa_i (1 - x_i²) + x_i²) / 4
//! ric_a = 1/4 - (1/2) Σ (x_i - 1) b_i / n
//! ```
//!
//! (the a-block uses the irreducible simplification), and the scalar curvature is
//!
//! ```text
//! S = -(1/4) Σ α_i b_i / α² + (1/2) Σ b_i / α + n / (4α) + (1/4) Σ kappa_i d_i / α_i.
//! ```
//!
//! # Slice coordinates
//!
//! On the slice, `n T_a / α + Σ d_i T_i / α_i = 1`, so for `T_a > 0` the
//! complement coefficient is eliminated through
//! `w = 1/α = (1 - Σ d_i T_i / α_i) / (n T_a)`. The optimizer works in
//! `u_i = ln α_i`. Writing `F(u) = S(1/w(u), e^u)`,
//!
//! ```text
//! ∂w/∂u_i   = d_i T_i / (n T_a α_i)
//! ∂S/∂w     = -(1/2) w Σ_j α_j b_j + (1/2) Σ_j b_j + n/4
//! ∂F/∂u_i   = ∂S/∂w · ∂w/∂u_i - (1/4) w² α_i b_i - (1/4) kappa_i d_i / α_i
//! ```
//!
//! The last two terms are the explicit dependence of `S` on `α_i` at fixed
//! `w`, multiplied by `∂α_i/∂u_i = α_i`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::structure::{MetricCoefficients, PrescribedTensor, StructureData};

/// Ricci coefficients relative to Q together with the scalar curvature.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvatureReport {
    pub ric_a: f64,
    pub ric_blocks: Vec<f64>,
    pub scalar: f64,
}

/// Ricci block coefficient as a function of the ratio `x = α_i / α`.
pub(crate) fn ric_block(kappa: f64, x: f64) -> f64 {
    0.25 * (kappa * (1.0 - x * x) + x * x)
}

/// Ricci coefficient on `a` as a function of the ratios.
pub(crate) fn ric_complement(sd: &StructureData, ratios: &[f64]) -> f64 {
    let n = sd.n() as f64;
    let sum: f64 = sd.blocks().iter().zip(ratios).map(|(b, &x)| (x - 1.0) * b.defect()).sum();
    0.25 - 0.5 * sum / n
}

pub fn ricci(sd: &StructureData, g: &MetricCoefficients) -> Result<CurvatureReport> {
    sd.check_len(g.alphas().len())?;
    let ratios = g.ratios();
    let ric_blocks = sd.blocks().iter().zip(&ratios).map(|(b, &x)| ric_block(b.kappa, x)).collect();
    Ok(CurvatureReport {
        ric_a: ric_complement(sd, &ratios),
        ric_blocks,
        scalar: scalar_unchecked(sd, g.alpha_a(), g.alphas()),
    })
}

pub fn scalar(sd: &StructureData, g: &MetricCoefficients) -> Result<f64> {
    sd.check_len(g.alphas().len())?;
    Ok(scalar_unchecked(sd, g.alpha_a(), g.alphas()))
}

pub(crate) fn scalar_unchecked(sd: &StructureData, alpha: f64, alphas: &[f64]) -> f64 {
    let n = sd.n() as f64;
    let mut weighted = 0.0;
    let mut defect = 0.0;
    let mut casimir = 0.0;
    for (b, &ai) in sd.blocks().iter().zip(alphas) {
        weighted += ai * b.defect();
        defect += b.defect();
        casimir += b.kappa * b.d as f64 / ai;
    }
    -0.25 * weighted / (alpha * alpha) + 0.5 * defect / alpha + n / (4.0 * alpha) + 0.25 * casimir
}

/// `tr_g T = n T_a / α + Σ d_i T_i / α_i`.
pub fn trace_g(sd: &StructureData, g: &MetricCoefficients, t: &PrescribedTensor) -> Result<f64> {
    sd.check_len(g.alphas().len())?;
    sd.check_len(t.ts().len())?;
    Ok(sd.n() as f64 * t.t_a() / g.alpha_a() + block_load(sd, t, g.alphas()))
}

fn block_load(sd: &StructureData, t: &PrescribedTensor, alphas: &[f64]) -> f64 {
    sd.blocks().iter().zip(t.ts()).zip(alphas).map(|((b, &ti), &ai)| b.d as f64 * ti / ai).sum()
}

/// Rescales `g` onto the slice `tr_g T = 1`.
pub fn normalize_to_slice(
    sd: &StructureData,
    g: &MetricCoefficients,
    t: &PrescribedTensor,
) -> Result<MetricCoefficients> {
    let trace = trace_g(sd, g, t)?;
    g.scaled(trace)
}

/// The slice metric with the given block coefficients: solves `tr_g T = 1` for α.
pub fn slice_metric(
    sd: &StructureData,
    t: &PrescribedTensor,
    alphas: &[f64],
) -> Result<MetricCoefficients> {
    sd.check_len(t.ts().len())?;
    sd.check_len(alphas.len())?;
    t.require_positive_ta()?;
    if let Some((i, &a)) = alphas.iter().enumerate().find(|(_, a)| !(**a > 0.0 && a.is_finite())) {
        return Err(Error::NonPositiveCoefficient { name: format!("alpha_{}", i + 1), value: a });
    }
    let load = block_load(sd, t, alphas);
    if load >= 1.0 {
        return Err(Error::InfeasiblePoint { load });
    }
    let alpha = sd.n() as f64 * t.t_a() / (1.0 - load);
    MetricCoefficients::new(alpha, alphas.to_vec())
}

/// Scalar curvature on the slice as a function of the block coefficients.
pub fn scalar_on_slice(sd: &StructureData, t: &PrescribedTensor, alphas: &[f64]) -> Result<f64> {
    let g = slice_metric(sd, t, alphas)?;
    Ok(scalar_unchecked(sd, g.alpha_a(), g.alphas()))
}

/// Gradient of `u ↦ scalar_on_slice(sd, T, exp(u))`.
pub fn grad_scalar_on_slice(sd: &StructureData, t: &PrescribedTensor, u: &[f64]) -> Result<Vec<f64>> {
    sd.check_len(t.ts().len())?;
    sd.check_len(u.len())?;
    t.require_positive_ta()?;
    let objective = SliceObjective::new(sd, t);
    let mut grad = vec![0.0; u.len()];
    match objective.value_grad(u, &mut grad) {
        Some(_) => Ok(grad),
        None => {
            let load = objective.load(u);
            Err(Error::InfeasiblePoint { load })
        }
    }
}

/// Constant `c` with `Ric_g ≈ c T`, and how far `g` is from solving it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RicciResidual {
    pub c: f64,
    pub residual: f64,
}

/// `c = ric_a / T_a`; residual is `max_i |ric_i / T_i - c|`.
pub fn ricci_residual(
    sd: &StructureData,
    g: &MetricCoefficients,
    t: &PrescribedTensor,
) -> Result<RicciResidual> {
    sd.check_len(t.ts().len())?;
    t.require_positive_ta()?;
    let report = ricci(sd, g)?;
    let c = report.ric_a / t.t_a();
    let residual = report
        .ric_blocks
        .iter()
        .zip(t.ts())
        .map(|(r, ti)| (r / ti - c).abs())
        .fold(0.0, f64::max);
    Ok(RicciResidual { c, residual })
}

/// Slice objective in log coordinates with precomputed block constants.
///
/// Returns `None` outside the open feasible set.
#[derive(Debug, Clone)]
pub(crate) struct SliceObjective {
    n: f64,
    nta: f64,
    defect_total: f64,
    // per block: d_i T_i, b_i, kappa_i d_i
    load: Vec<f64>,
    defect: Vec<f64>,
    casimir: Vec<f64>,
}

impl SliceObjective {
    pub(crate) fn new(sd: &StructureData, t: &PrescribedTensor) -> Self {
        let blocks = sd.blocks();
        Self {
            n: sd.n() as f64,
            nta: sd.n() as f64 * t.t_a(),
            defect_total: sd.total_defect(),
            load: blocks.iter().zip(t.ts()).map(|(b, &ti)| b.d as f64 * ti).collect(),
            defect: blocks.iter().map(|b| b.defect()).collect(),
            casimir: blocks.iter().map(|b| b.kappa * b.d as f64).collect(),
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.load.len()
    }

    pub(crate) fn load(&self, u: &[f64]) -> f64 {
        self.load.iter().zip(u).map(|(l, ui)| l * (-ui).exp()).sum()
    }

    /// Complement coefficient `α` at `u`, if feasible.
    pub(crate) fn alpha(&self, u: &[f64]) -> Option<f64> {
        let slack = 1.0 - self.load(u);
        (slack > 0.0 && u.iter().all(|x| x.is_finite())).then(|| self.nta / slack)
    }

    pub(crate) fn value_grad(&self, u: &[f64], grad: &mut [f64]) -> Option<f64> {
        let w = 1.0 / self.alpha(u)?;
        let alphas: Vec<f64> = u.iter().map(|x| x.exp()).collect();
        let weighted: f64 = alphas.iter().zip(&self.defect).map(|(a, b)| a * b).sum();
        let casimir: f64 = alphas.iter().zip(&self.casimir).map(|(a, k)| k / a).sum();
        let ds_dw = -0.5 * w * weighted + 0.5 * self.defect_total + 0.25 * self.n;
        for i in 0..u.len() {
            let dw = self.load[i] / (self.nta * alphas[i]);
            grad[i] = ds_dw * dw - 0.25 * w * w * alphas[i] * self.defect[i]
                - 0.25 * self.casimir[i] / alphas[i];
        }
        Some(-0.25 * w * w * weighted + 0.5 * self.defect_total * w + 0.25 * self.n * w + 0.25 * casimir)
    }
}
