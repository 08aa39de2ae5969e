//! Multi-start quasi-Newton ascent of the scalar curvature on the slice.

use crate::conditions::{
    compactness_bounds, dominant_block, necessary_condition, simple_k_solvable, CompactnessBounds,
};
use crate::curvature::{grad_scalar_on_slice, ricci_residual, scalar, slice_metric, SliceObjective};
use crate::error::Result;
use crate::structure::{PrescribedTensor, StructureData};

use super::algebraic::solve_normalized;
use super::starts::log_starts;
use super::{
    norm, par_map, Certificate, Diagnostics, Solution, SolutionSource, SolveOutcome, SolveStatus,
    SolverOptions,
};

const ARMIJO: f64 = 1e-4;
/// Largest change of any `ln α_i` in one step.
const MAX_STEP: f64 = 4.0;
const POLISH_STEPS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Termination {
    Converged,
    Stalled,
    Escaped,
    MaxIter,
}

#[derive(Debug, Clone)]
struct StartResult {
    u: Vec<f64>,
    value: f64,
    grad_norm: f64,
    iterations: usize,
    termination: Termination,
}

/// Maximizes S on the slice `tr_g T = 1` from several starts.
///
/// Runs the necessary condition first (failure is a certificate). Converged
/// starts are verified through the Ricci residual. When no start converges and
/// every start leaves each probed compact set, the instance is reported as
/// `NoCriticalPointDetected`, unless the algebraic solver (when enabled) finds
/// a root.
pub fn maximize_scalar(sd: &StructureData, t: &PrescribedTensor, opts: &SolverOptions) -> Result<SolveOutcome> {
    let (t_hat, scale) = t.normalized()?;
    sd.check_len(t.ts().len())?;

    if sd.r() >= 1 {
        if !necessary_condition(sd, &t_hat)?.holds {
            return Ok(SolveOutcome::certified(Certificate::NecessaryCondition));
        }
        if sd.r() == 1 && sd.s() == 0 && !simple_k_solvable(sd, &t_hat)?.holds {
            return Ok(SolveOutcome::certified(Certificate::SimpleKCondition));
        }
    }

    let objective = SliceObjective::new(sd, &t_hat);
    let mut eps = opts.escape_eps.clone();
    eps.sort_by(|a, b| b.total_cmp(a));
    let boxes = eps
        .iter()
        .map(|&e| compactness_bounds(sd, &t_hat, e))
        .collect::<Result<Vec<_>>>()?;

    let starts = log_starts(sd, &t_hat, opts.starts, opts.seed, opts.start_range);
    let results = par_map(starts, |u0| ascend(&objective, u0, &boxes, opts));

    let ceiling = dominant_block(sd, &t_hat).ok().map(|(m, _)| sd.blocks()[m].kappa / (4.0 * t_hat.ts()[m]));
    let mut diag = Diagnostics {
        starts_attempted: results.len(),
        iterations: results.iter().map(|r| r.iterations).sum(),
        ceiling: ceiling.map(|c| c / scale),
        ..Default::default()
    };

    let mut best: Option<(usize, f64)> = None;
    for (i, r) in results.iter().enumerate() {
        match r.termination {
            Termination::Escaped => {
                diag.escaped_starts += 1;
                let s = r.value / scale;
                diag.escape_scalar = Some(diag.escape_scalar.map_or(s, |e: f64| e.max(s)));
            }
            Termination::Converged | Termination::Stalled => {
                let g = slice_metric(sd, &t_hat, &exp(&r.u))?;
                if ricci_residual(sd, &g, &t_hat)?.residual < opts.residual_tol {
                    diag.converged_starts += 1;
                    if best.is_none_or(|(_, v)| r.value > v) {
                        best = Some((i, r.value));
                    }
                }
            }
            Termination::MaxIter => {}
        }
    }
    diag.escaped = !results.is_empty() && diag.escaped_starts == results.len();

    if let Some((i, _)) = best {
        diag.final_gradient_norm = Some(results[i].grad_norm / scale);
        diag.source = Some(SolutionSource::Ascent);
        let alphas: Vec<f64> = exp(&results[i].u).iter().map(|a| a * scale).collect();
        let solution = solution_from_alphas(sd, t, &alphas)?;
        return Ok(SolveOutcome { status: SolveStatus::SolutionFound, solution: Some(solution), diagnostics: diag });
    }
    diag.final_gradient_norm = results
        .iter()
        .map(|r| r.grad_norm / scale)
        .min_by(f64::total_cmp);

    if opts.algebraic_fallback {
        let roots = solve_normalized(sd, &t_hat, opts)?;
        let mut found: Option<(Solution, f64)> = None;
        for root in roots.iter().filter(|r| r.c > 0.0 && r.residual < opts.residual_tol) {
            let alphas: Vec<f64> = root.slice_alphas(sd, &t_hat).iter().map(|a| a * scale).collect();
            let sol = solution_from_alphas(sd, t, &alphas)?;
            if found.as_ref().is_none_or(|(_, s)| sol.scalar > *s) {
                let s = sol.scalar;
                found = Some((sol, s));
            }
        }
        if let Some((sol, _)) = found {
            diag.source = Some(SolutionSource::Algebraic);
            diag.final_gradient_norm = sol.gradient_norm;
            return Ok(SolveOutcome { status: SolveStatus::SolutionFound, solution: Some(sol), diagnostics: diag });
        }
    }

    let status = if diag.escaped { SolveStatus::NoCriticalPointDetected } else { SolveStatus::Inconclusive };
    Ok(SolveOutcome { status, solution: None, diagnostics: diag })
}

pub(crate) fn solution_from_alphas(sd: &StructureData, t: &PrescribedTensor, alphas: &[f64]) -> Result<Solution> {
    let metric = slice_metric(sd, t, alphas)?;
    let rr = ricci_residual(sd, &metric, t)?;
    let u: Vec<f64> = alphas.iter().map(|a| a.ln()).collect();
    let gradient_norm = Some(norm(&grad_scalar_on_slice(sd, t, &u)?));
    Ok(Solution {
        scalar: scalar(sd, &metric)?,
        ratios: metric.ratios(),
        c: rr.c,
        residual: rr.residual,
        gradient_norm,
        metric,
    })
}

fn exp(u: &[f64]) -> Vec<f64> {
    u.iter().map(|x| x.exp()).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn outside_all(boxes: &[CompactnessBounds], alpha: f64, u: &[f64]) -> bool {
    !boxes.is_empty() && boxes.iter().all(|b| !b.contains_log(alpha, u))
}

/// BFGS ascent with backtracking. `h` approximates the inverse Hessian of `-F`.
fn ascend(obj: &SliceObjective, u0: Vec<f64>, boxes: &[CompactnessBounds], opts: &SolverOptions) -> StartResult {
    let dim = obj.dim();
    let mut u = u0;
    let mut grad = vec![0.0; dim];
    let Some(mut value) = obj.value_grad(&u, &mut grad) else {
        return StartResult { u, value: f64::NAN, grad_norm: f64::INFINITY, iterations: 0, termination: Termination::Stalled };
    };
    let mut h = identity(dim);
    let mut fresh = true;
    let mut new_grad = vec![0.0; dim];
    let mut trial = vec![0.0; dim];

    for iter in 0..opts.max_iter {
        let gnorm = norm(&grad);
        if gnorm < opts.grad_tol {
            return finish(obj, u, iter, Termination::Converged, opts);
        }
        let alpha = obj.alpha(&u).unwrap_or(f64::INFINITY);
        if outside_all(boxes, alpha, &u) {
            return StartResult { u, value, grad_norm: gnorm, iterations: iter, termination: Termination::Escaped };
        }

        let mut dir = mat_vec(&h, &grad);
        if dot(&dir, &grad) <= 0.0 {
            h = identity(dim);
            fresh = true;
            dir = grad.clone();
        }
        let longest = dir.iter().fold(0.0f64, |m, d| m.max(d.abs()));
        let mut step = if longest > MAX_STEP { MAX_STEP / longest } else { 1.0 };
        let slope = dot(&dir, &grad);
        let slack = 4.0 * f64::EPSILON * value.abs();

        let mut accepted = None;
        for _ in 0..=opts.max_halvings {
            for k in 0..dim {
                trial[k] = u[k] + step * dir[k];
            }
            if let Some(v) = obj.value_grad(&trial, &mut new_grad) {
                if v >= value + ARMIJO * step * slope - slack {
                    accepted = Some(v);
                    break;
                }
            }
            step *= 0.5;
        }
        let Some(v) = accepted else {
            if fresh {
                return finish(obj, u, iter, Termination::Stalled, opts);
            }
            h = identity(dim);
            fresh = true;
            continue;
        };

        let s: Vec<f64> = trial.iter().zip(&u).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = grad.iter().zip(&new_grad).map(|(g0, g1)| g0 - g1).collect();
        let step_len = s.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        u.copy_from_slice(&trial);
        grad.copy_from_slice(&new_grad);
        value = v;
        if step_len < opts.step_tol {
            return finish(obj, u, iter + 1, Termination::Stalled, opts);
        }
        let sy = dot(&s, &y);
        if sy > 1e-300 {
            if fresh {
                let scale = sy / dot(&y, &y);
                h.iter_mut().flatten().for_each(|x| *x *= scale);
                fresh = false;
            }
            bfgs_update(&mut h, &s, &y, sy);
        }
    }
    let gnorm = norm(&grad);
    StartResult { u, value, grad_norm: gnorm, iterations: opts.max_iter, termination: Termination::MaxIter }
}

/// Newton refinement of a converged point using a difference Hessian of the
/// analytic gradient. Steps are kept only while the gradient norm shrinks.
fn finish(obj: &SliceObjective, mut u: Vec<f64>, iterations: usize, termination: Termination, opts: &SolverOptions) -> StartResult {
    let dim = obj.dim();
    let mut grad = vec![0.0; dim];
    let mut value = obj.value_grad(&u, &mut grad).unwrap_or(f64::NAN);
    let mut gnorm = norm(&grad);
    for _ in 0..POLISH_STEPS {
        if gnorm < 1e-15 {
            break;
        }
        let Some(hess) = fd_hessian(obj, &u) else { break };
        let Some(delta) = hess.lu().solve(&nalgebra::DVector::from_column_slice(&grad)) else { break };
        let trial: Vec<f64> = u.iter().zip(delta.iter()).map(|(a, d)| a - d).collect();
        let mut g2 = vec![0.0; dim];
        match obj.value_grad(&trial, &mut g2) {
            Some(v) if norm(&g2) < gnorm => {
                u = trial;
                gnorm = norm(&g2);
                grad = g2;
                value = v;
            }
            _ => break,
        }
    }
    let termination = if gnorm < opts.grad_tol { Termination::Converged } else { termination };
    StartResult { u, value, grad_norm: gnorm, iterations, termination }
}

fn fd_hessian(obj: &SliceObjective, u: &[f64]) -> Option<nalgebra::DMatrix<f64>> {
    let dim = u.len();
    let step = 1e-5;
    let mut hess = nalgebra::DMatrix::zeros(dim, dim);
    let mut gp = vec![0.0; dim];
    let mut gm = vec![0.0; dim];
    let mut x = u.to_vec();
    for k in 0..dim {
        x[k] = u[k] + step;
        obj.value_grad(&x, &mut gp)?;
        x[k] = u[k] - step;
        obj.value_grad(&x, &mut gm)?;
        x[k] = u[k];
        for i in 0..dim {
            hess[(i, k)] = (gp[i] - gm[i]) / (2.0 * step);
        }
    }
    let sym = (&hess + hess.transpose()) * 0.5;
    Some(sym)
}

fn identity(dim: usize) -> Vec<Vec<f64>> {
    (0..dim).map(|i| (0..dim).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect()
}

fn mat_vec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// `H ← (I - ρ s yᵀ) H (I - ρ y sᵀ) + ρ s sᵀ`.
fn bfgs_update(h: &mut [Vec<f64>], s: &[f64], y: &[f64], sy: f64) {
    let rho = 1.0 / sy;
    let hy = mat_vec(h, y);
    let yhy = dot(y, &hy);
    let dim = s.len();
    for i in 0..dim {
        for j in 0..dim {
            h[i][j] += -rho * (s[i] * hy[j] + hy[i] * s[j]) + (rho * rho * yhy + rho) * s[i] * s[j];
        }
    }
}
