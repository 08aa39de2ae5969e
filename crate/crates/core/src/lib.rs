//! Prescribed Ricci curvature `Ric(g) = cT` within left-invariant naturally
//! reductive metrics on a compact Lie group.
//!
//! Metrics and tensors are block-diagonal multiples of the background form Q:
//! a coefficient on the isotropy complement `a` and one per block `k_i`. The
//! complement is assumed to be Ad(K)-irreducible; results are meaningless
//! otherwise and that assumption is not checked.
//!
//! ```
//! use natred::{catalog_lookup, classify, PrescribedTensor, SolveStatus, SolverOptions};
//!
//! let sd = catalog_lookup("so6-diag").unwrap();
//! let t = PrescribedTensor::new(1.0, vec![1.0 / 6.0, 1.0 / 6.0]).unwrap();
//! let report = classify(&sd, &t, &SolverOptions::default()).unwrap();
//! assert_eq!(report.outcome.status, SolveStatus::SolutionFound);
//! ```

pub mod catalog;
pub mod conditions;
pub mod curvature;
pub mod error;
pub mod input;
pub mod region;
pub mod solver;
pub mod structure;

pub use catalog::{catalog_entries, catalog_lookup, is_so6_diag};
pub use conditions::{
    cad_interval_so6, cad_membership_so6, compactness_bounds, necessary_condition, simple_k_solvable,
    sufficient_condition, CadMembership, CompactnessBounds, ConditionVerdict,
};
pub use curvature::{
    grad_scalar_on_slice, normalize_to_slice, ricci, ricci_residual, scalar, scalar_on_slice, slice_metric,
    trace_g, CurvatureReport, RicciResidual,
};
pub use error::{Error, Result};
pub use solver::{
    classify, maximize_scalar, solve_algebraic, solve_simple_k, AlgebraicRoot, Classification, SolveOutcome,
    SolveStatus, SolverOptions,
};
pub use structure::{make_structure, total_dimension, trace_q, Block, MetricCoefficients, PrescribedTensor, StructureData};
