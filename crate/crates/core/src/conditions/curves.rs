//! Curves on the slice `tr_g T = 1` used to probe the scalar curvature.

use crate::curvature::scalar_unchecked;
use crate::error::{Error, Result};
use crate::structure::{trace_q, MetricCoefficients, PrescribedTensor, StructureData};

/// `U = tr_Q T - d_m T_m`; the sufficient-condition curve lives on `t > U`.
pub fn sufficient_curve_threshold(sd: &StructureData, t: &PrescribedTensor, m: usize) -> Result<f64> {
    sd.check_index(m)?;
    Ok(trace_q(sd, t)? - sd.blocks()[m].d as f64 * t.ts()[m])
}

fn phi(sd: &StructureData, t: &PrescribedTensor, m: usize, param: f64) -> Result<f64> {
    let u = sufficient_curve_threshold(sd, t, m)?;
    if !(param > u) {
        return Err(Error::CurveDomain { t: param, bound: u });
    }
    Ok(sd.blocks()[m].d as f64 * t.ts()[m] * param / (param - u))
}

/// `g_t`: every coefficient equals `t` except block `m`, which carries
/// `φ(t) = d_m T_m t / (t - U)`.
pub fn sufficient_curve_metric(
    sd: &StructureData,
    t: &PrescribedTensor,
    m: usize,
    param: f64,
) -> Result<MetricCoefficients> {
    let phi = phi(sd, t, m, param)?;
    let alphas = (0..sd.len()).map(|i| if i == m { phi } else { param }).collect();
    MetricCoefficients::new(param, alphas)
}

/// Scalar curvature along `g_t`. As `t → ∞` this tends to `kappa_m / (4 T_m)`.
pub fn sufficient_curve_scalar(
    sd: &StructureData,
    t: &PrescribedTensor,
    m: usize,
    param: f64,
) -> Result<f64> {
    let phi = phi(sd, t, m, param)?;
    let bm = sd.blocks()[m];
    let n = sd.n() as f64;
    let dm = bm.d as f64;
    let casimir: f64 = sd.blocks().iter().map(|b| b.kappa * b.d as f64).sum();
    let inv = 1.0 / (4.0 * param);
    Ok(inv * dm * (1.0 - bm.kappa) - phi * inv / param * dm * (1.0 - bm.kappa)
        + inv * sd.total_defect()
        + n * inv
        + inv * casimir
        - inv * bm.kappa * dm
        + bm.kappa * dm / (4.0 * phi))
}

/// `g_t^j`: block `j` scaled by `e^t`, complement coefficient
/// `f_j(t) = n T_a α α_j / (n T_a α_j + d_j T_j α (1 - e^{-t}))`.
///
/// The curve passes through `g` at `t = 0` and preserves `tr_g T`; starting
/// from a slice metric it stays on the slice. Defined for
/// `t > V_j = -ln(1 + n T_a α_j / (d_j T_j α))`.
pub fn necessary_curve_metric(
    sd: &StructureData,
    t: &PrescribedTensor,
    g: &MetricCoefficients,
    j: usize,
    param: f64,
) -> Result<MetricCoefficients> {
    sd.check_len(t.ts().len())?;
    sd.check_len(g.alphas().len())?;
    sd.check_index(j)?;
    t.require_positive_ta()?;
    let nta = sd.n() as f64 * t.t_a();
    let alpha = g.alpha_a();
    let aj = g.alphas()[j];
    let djtj = sd.blocks()[j].d as f64 * t.ts()[j];
    let bound = -(nta * aj / (djtj * alpha)).ln_1p();
    if !(param > bound) || !param.is_finite() {
        return Err(Error::CurveDomain { t: param, bound });
    }
    let f = nta * alpha * aj / (nta * aj - djtj * alpha * (-param).exp_m1());
    let mut alphas = g.alphas().to_vec();
    alphas[j] *= param.exp();
    MetricCoefficients::new(f, alphas)
}

/// Scalar curvature along `g_t^j`.
pub fn necessary_curve_scalar(
    sd: &StructureData,
    t: &PrescribedTensor,
    g: &MetricCoefficients,
    j: usize,
    param: f64,
) -> Result<f64> {
    let gt = necessary_curve_metric(sd, t, g, j, param)?;
    Ok(scalar_unchecked(sd, gt.alpha_a(), gt.alphas()))
}
