use serde::Serialize;

use crate::error::{Error, Result};
use crate::structure::{MetricCoefficients, PrescribedTensor, StructureData};

/// Box `α ≤ Γ_a(ε)`, `α_i ≤ Γ_i(ε)` on the slice. Slice metrics outside it have
/// `S < kappa_m / (4 T_m) + ε`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompactnessBounds {
    pub eps: f64,
    pub gamma_a: f64,
    pub gammas: Vec<f64>,
}

impl CompactnessBounds {
    pub fn contains(&self, g: &MetricCoefficients) -> bool {
        g.alpha_a() <= self.gamma_a && g.alphas().iter().zip(&self.gammas).all(|(a, gam)| a <= gam)
    }

    /// Same test in log coordinates `u_i = ln α_i`, given the complement coefficient.
    pub(crate) fn contains_log(&self, alpha: f64, u: &[f64]) -> bool {
        alpha <= self.gamma_a && u.iter().zip(&self.gammas).all(|(ui, gam)| *ui <= gam.ln())
    }
}

/// `Γ_a(ε) = max{n / (2ε), Σ b_i / ε}` and
/// `Γ_j(ε) = 2 Γ_a² (Σ b_i / n + 1/2) / (T_a b_j)` with `b_i = d_i (1 - kappa_i)`.
pub fn compactness_bounds(sd: &StructureData, t: &PrescribedTensor, eps: f64) -> Result<CompactnessBounds> {
    sd.check_len(t.ts().len())?;
    t.require_positive_ta()?;
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::InvalidTensor { name: "eps".into(), value: eps, reason: "must be positive" });
    }
    let n = sd.n() as f64;
    let total = sd.total_defect();
    let gamma_a = (n / (2.0 * eps)).max(total / eps);
    let factor = 2.0 * gamma_a * gamma_a * (total / n + 0.5) / t.t_a();
    let gammas = sd.blocks().iter().map(|b| factor / b.defect()).collect();
    Ok(CompactnessBounds { eps, gamma_a, gammas })
}
