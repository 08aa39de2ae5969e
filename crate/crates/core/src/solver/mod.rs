//! Solving `Ric(g) = cT`: maximization of S on the slice, root finding on
//! the ratio equations, the exact simple-K path, and instance classification.

mod algebraic;
mod ascent;
mod classify;
mod simple_k;
mod starts;

pub use algebraic::{solve_algebraic, AlgebraicRoot};
pub use ascent::maximize_scalar;
pub use classify::{classify, Classification};
pub use simple_k::solve_simple_k;

use serde::{Deserialize, Serialize};

use crate::structure::MetricCoefficients;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverOptions {
    pub max_iter: usize,
    pub starts: usize,
    pub seed: u64,
    /// Ascent stops when the slice gradient norm drops below this.
    pub grad_tol: f64,
    /// Ascent also stops when a step is shorter than this.
    pub step_tol: f64,
    /// A candidate is accepted when the Ricci residual is below this.
    pub residual_tol: f64,
    /// Relative distance under which two roots count as one.
    pub dedup_tol: f64,
    pub max_halvings: u32,
    pub newton_max_iter: usize,
    /// ε values whose compact sets are probed for escaping iterates.
    pub escape_eps: Vec<f64>,
    /// Starts draw `α_i / (d_i T_i)` log-uniformly from this range.
    pub start_range: (f64, f64),
    /// Run the algebraic solver before reporting that no critical point exists.
    pub algebraic_fallback: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            max_iter: 10_000,
            starts: 16,
            seed: 0,
            grad_tol: 1e-10,
            step_tol: 1e-14,
            residual_tol: 1e-8,
            dedup_tol: 1e-6,
            max_halvings: 40,
            newton_max_iter: 100,
            escape_eps: vec![1e-1, 1e-2, 1e-3],
            start_range: (1.1, 100.0),
            algebraic_fallback: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SolveStatus {
    SolutionFound,
    CertifiedNoSolution,
    NoCriticalPointDetected,
    Inconclusive,
}

impl SolveStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveStatus::SolutionFound => "SolutionFound",
            SolveStatus::CertifiedNoSolution => "CertifiedNoSolution",
            SolveStatus::NoCriticalPointDetected => "NoCriticalPointDetected",
            SolveStatus::Inconclusive => "Inconclusive",
        }
    }
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SolutionSource {
    Ascent,
    Algebraic,
    SimpleK,
}

/// Why no solution can exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Certificate {
    NecessaryCondition,
    SimpleKCondition,
}

/// A metric on the slice `tr_g T = 1` with `Ric(g) = cT`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Solution {
    pub metric: MetricCoefficients,
    pub c: f64,
    pub residual: f64,
    pub scalar: f64,
    pub ratios: Vec<f64>,
    /// Norm of the slice gradient in log coordinates; absent when `T_a = 0`.
    pub gradient_norm: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Diagnostics {
    pub starts_attempted: usize,
    pub converged_starts: usize,
    pub escaped_starts: usize,
    pub iterations: usize,
    pub final_gradient_norm: Option<f64>,
    /// Every start left every probed compact set.
    pub escaped: bool,
    /// Largest scalar curvature seen on an escaping start.
    pub escape_scalar: Option<f64>,
    /// `kappa_m / (4 T_m)`, the limit of S along escaping curves.
    pub ceiling: Option<f64>,
    pub source: Option<SolutionSource>,
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub solution: Option<Solution>,
    pub diagnostics: Diagnostics,
}

impl SolveOutcome {
    pub(crate) fn certified(certificate: Certificate) -> Self {
        Self {
            status: SolveStatus::CertifiedNoSolution,
            solution: None,
            diagnostics: Diagnostics { certificate: Some(certificate), ..Default::default() },
        }
    }
}

/// Relative distance used to deduplicate and compare ratio vectors.
pub(crate) fn relative_distance(a: &[f64], b: &[f64]) -> f64 {
    let diff = a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt();
    let scale = norm(a).max(norm(b));
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

pub(crate) fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

#[cfg(feature = "parallel")]
pub(crate) fn par_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}
