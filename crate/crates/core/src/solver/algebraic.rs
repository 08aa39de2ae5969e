//! Root finding on the ratio form of `Ric(g) = cT`.
//!
//! The Ricci coefficients depend only on `x_i = α_i / α`, so the equation
//! reduces to the square system `ric_i(x) = T_i ric_a(x) / T_a`. Newton
//! iterates in `y_i = ln x_i`.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::curvature::{ric_block, ric_complement, ricci_residual, slice_metric};
use crate::error::{Error, Result};
use crate::structure::{PrescribedTensor, StructureData};

use super::starts::{log_starts, ratio_starts};
use super::{par_map, relative_distance, SolverOptions};

const MAX_STEP: f64 = 4.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgebraicRoot {
    pub ratios: Vec<f64>,
    pub c: f64,
    pub residual: f64,
    /// False flags a root with `c ≤ 0`.
    pub positive_c: bool,
}

impl AlgebraicRoot {
    /// Block coefficients of the slice representative of this root.
    pub fn slice_alphas(&self, sd: &StructureData, t: &PrescribedTensor) -> Vec<f64> {
        let alpha = slice_alpha(sd, t, &self.ratios);
        self.ratios.iter().map(|x| x * alpha).collect()
    }
}

/// α with `tr_g T = 1` for given ratios: `α = n T_a + Σ d_i T_i / x_i`.
pub(crate) fn slice_alpha(sd: &StructureData, t: &PrescribedTensor, ratios: &[f64]) -> f64 {
    sd.n() as f64 * t.t_a()
        + sd.blocks().iter().zip(t.ts()).zip(ratios).map(|((b, ti), x)| b.d as f64 * ti / x).sum::<f64>()
}

/// All distinct roots found by damped Newton from the configured starts.
///
/// An empty search is reported as [`Error::NonConvergence`]; that is a
/// heuristic negative, not a proof of non-existence.
pub fn solve_algebraic(sd: &StructureData, t: &PrescribedTensor, opts: &SolverOptions) -> Result<Vec<AlgebraicRoot>> {
    let (t_hat, scale) = t.normalized()?;
    sd.check_len(t.ts().len())?;
    let roots = solve_normalized(sd, &t_hat, opts)?;
    if roots.is_empty() {
        return Err(Error::NonConvergence { starts: 2 * opts.starts });
    }
    Ok(roots
        .into_iter()
        .map(|r| AlgebraicRoot { c: r.c / scale, residual: r.residual / scale, ..r })
        .collect())
}

pub(crate) fn solve_normalized(sd: &StructureData, t: &PrescribedTensor, opts: &SolverOptions) -> Result<Vec<AlgebraicRoot>> {
    let system = RatioSystem::new(sd, t);
    // slice starts mirror the ascent; ratio starts cover roots with small x_i
    let mut starts: Vec<Vec<f64>> = log_starts(sd, t, opts.starts, opts.seed, opts.start_range)
        .into_iter()
        .map(|u| {
            let alphas: Vec<f64> = u.iter().map(|x| x.exp()).collect();
            let alpha = slice_metric(sd, t, &alphas).map(|g| g.alpha_a()).unwrap_or(f64::NAN);
            alphas.iter().map(|a| (a / alpha).ln()).collect()
        })
        .collect();
    starts.extend(ratio_starts(sd.len(), opts.starts, opts.seed));
    let found = par_map(starts, |y0| system.newton(y0, opts));

    let mut roots: Vec<AlgebraicRoot> = Vec::new();
    for y in found.into_iter().flatten() {
        let ratios: Vec<f64> = y.iter().map(|v| v.exp()).collect();
        if roots.iter().any(|r| relative_distance(&r.ratios, &ratios) < opts.dedup_tol) {
            continue;
        }
        let alpha = slice_alpha(sd, t, &ratios);
        let alphas: Vec<f64> = ratios.iter().map(|x| x * alpha).collect();
        let Ok(g) = slice_metric(sd, t, &alphas) else { continue };
        let rr = ricci_residual(sd, &g, t)?;
        if rr.residual >= opts.residual_tol {
            continue;
        }
        roots.push(AlgebraicRoot { ratios, c: rr.c, residual: rr.residual, positive_c: rr.c > 0.0 });
    }
    Ok(roots)
}

struct RatioSystem<'a> {
    sd: &'a StructureData,
    t: &'a PrescribedTensor,
}

impl<'a> RatioSystem<'a> {
    fn new(sd: &'a StructureData, t: &'a PrescribedTensor) -> Self {
        Self { sd, t }
    }

    fn residual(&self, y: &[f64]) -> Option<Vec<f64>> {
        let x: Vec<f64> = y.iter().map(|v| v.exp()).collect();
        if x.iter().any(|v| !v.is_finite() || *v == 0.0) {
            return None;
        }
        let c = ric_complement(self.sd, &x) / self.t.t_a();
        Some(
            self.sd
                .blocks()
                .iter()
                .zip(self.t.ts())
                .zip(&x)
                .map(|((b, ti), &xi)| ric_block(b.kappa, xi) - c * ti)
                .collect(),
        )
    }

    fn jacobian(&self, y: &[f64]) -> DMatrix<f64> {
        let n = self.sd.n() as f64;
        let x: Vec<f64> = y.iter().map(|v| v.exp()).collect();
        let blocks = self.sd.blocks();
        let dim = x.len();
        DMatrix::from_fn(dim, dim, |i, k| {
            let coupling = 0.5 * self.t.ts()[i] * blocks[k].defect() * x[k] / (n * self.t.t_a());
            let diag = if i == k { 0.5 * (1.0 - blocks[i].kappa) * x[i] * x[i] } else { 0.0 };
            diag + coupling
        })
    }

    /// Damped Newton: the step is halved until the residual norm decreases.
    fn newton(&self, mut y: Vec<f64>, opts: &SolverOptions) -> Option<Vec<f64>> {
        if y.iter().any(|v| !v.is_finite()) {
            return None;
        }
        let mut f = self.residual(&y)?;
        let mut fnorm = inf_norm(&f);
        for _ in 0..opts.newton_max_iter {
            if fnorm < 1e-14 {
                return Some(y);
            }
            let delta = self.jacobian(&y).lu().solve(&DVector::from_column_slice(&f))?;
            let longest = delta.iter().fold(0.0f64, |m, d| m.max(d.abs()));
            let mut step = if longest > MAX_STEP { MAX_STEP / longest } else { 1.0 };
            let mut accepted = false;
            for _ in 0..=opts.max_halvings {
                let trial: Vec<f64> = y.iter().zip(delta.iter()).map(|(a, d)| a - step * d).collect();
                if let Some(ft) = self.residual(&trial) {
                    let tn = inf_norm(&ft);
                    if tn < fnorm {
                        y = trial;
                        f = ft;
                        fnorm = tn;
                        accepted = true;
                        break;
                    }
                }
                step *= 0.5;
            }
            if !accepted {
                break;
            }
            if y.iter().any(|v| v.abs() > 60.0) {
                return None;
            }
        }
        (fnorm < 1e-12).then_some(y)
    }
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}
