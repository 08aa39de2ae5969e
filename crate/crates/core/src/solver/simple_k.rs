use crate::conditions::{require_simple_k, simple_k_solvable};
use crate::curvature::{ric_block, ric_complement, ricci};
use crate::error::Result;
use crate::structure::{MetricCoefficients, PrescribedTensor, StructureData};

use super::ascent::solution_from_alphas;
use super::{Certificate, Diagnostics, Solution, SolutionSource, SolveOutcome, SolveStatus};

const BISECTION_STEPS: usize = 200;

/// Exact solution when K is simple.
///
/// In `x = α_1 / α`, `ric_1(x) / T_1` increases and `ric_a(x)` decreases
/// linearly, so `h(x) = ric_1 / T_1 - ric_a / T_a` has a single sign change
/// on `x > 0` exactly when the simple-K condition holds. The root is found by
/// bisection; for `T_a = 0` the equation becomes `ric_a(x) = 0`.
pub fn solve_simple_k(sd: &StructureData, t: &PrescribedTensor) -> Result<SolveOutcome> {
    require_simple_k(sd)?;
    if !simple_k_solvable(sd, t)?.holds {
        return Ok(SolveOutcome::certified(Certificate::SimpleKCondition));
    }
    let kappa = sd.blocks()[0].kappa;
    let t1 = t.ts()[0];
    let t_a = t.t_a();
    let h = |x: f64| {
        if t_a > 0.0 {
            ric_block(kappa, x) / t1 - ric_complement(sd, &[x]) / t_a
        } else {
            -ric_complement(sd, &[x])
        }
    };

    let mut lo = 0.0;
    let mut hi = 1.0;
    let mut iterations = 0;
    while h(hi) <= 0.0 {
        hi *= 2.0;
        iterations += 1;
    }
    for _ in 0..BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        if h(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = if h(lo).abs() <= h(hi).abs() { lo } else { hi };

    let d1 = sd.blocks()[0].d as f64;
    let alpha = sd.n() as f64 * t_a + d1 * t1 / x;
    let solution = if t_a > 0.0 {
        solution_from_alphas(sd, t, &[x * alpha])?
    } else {
        degenerate_solution(sd, t, alpha, x)?
    };
    Ok(SolveOutcome {
        status: SolveStatus::SolutionFound,
        solution: Some(solution),
        diagnostics: Diagnostics {
            iterations,
            final_gradient_norm: None,
            source: Some(SolutionSource::SimpleK),
            ..Default::default()
        },
    })
}

/// `T_a = 0`: `c = ric_1 / T_1`; the residual also measures `|ric_a|`.
fn degenerate_solution(sd: &StructureData, t: &PrescribedTensor, alpha: f64, x: f64) -> Result<Solution> {
    let metric = MetricCoefficients::new(alpha, vec![x * alpha])?;
    let report = ricci(sd, &metric)?;
    let c = report.ric_blocks[0] / t.ts()[0];
    Ok(Solution {
        residual: report.ric_a.abs() / t.ts()[0],
        scalar: report.scalar,
        ratios: metric.ratios(),
        c,
        gradient_norm: None,
        metric,
    })
}
