use thiserror::Error;

/// Errors raised while validating inputs or evaluating the curvature model.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("structure has no blocks")]
    EmptyStructure,
    #[error("isotropy complement dimension must be at least 1")]
    ZeroComplement,
    #[error("block {index}: dimension must be at least 1")]
    ZeroBlockDimension { index: usize },
    #[error("block {index}: kappa = {kappa} is outside [0, 1)")]
    KappaOutOfRange { index: usize, kappa: f64 },
    #[error("block {index}: central block (kappa = 0) must be one-dimensional, got d = {d}")]
    CentralBlockNotOneDim { index: usize, d: u32 },
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
    #[error("expected {expected} block coefficients, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("metric coefficient {name} = {value} is not strictly positive")]
    NonPositiveCoefficient { name: String, value: f64 },
    #[error("tensor coefficient {name} = {value} is invalid: {reason}")]
    InvalidTensor { name: String, value: f64, reason: &'static str },
    #[error("point is outside the feasible set: sum d_i T_i / alpha_i = {load} >= 1")]
    InfeasiblePoint { load: f64 },
    #[error("T_a = 0: the slice cannot be solved for the complement coefficient")]
    DegenerateTa,
    #[error("structure has no block with kappa > 0")]
    NoSimpleBlocks,
    #[error("structure is not of simple-K type (need r = 1, s = 0; got r = {r}, s = {s})")]
    NotSimpleK { r: usize, s: usize },
    #[error("T_1 must be positive, got {0}")]
    NonPositiveT1(f64),
    #[error("curve parameter t = {t} is outside the domain t > {bound}")]
    CurveDomain { t: f64, bound: f64 },
    #[error("block index {index} out of range for {len} blocks")]
    InvalidIndex { index: usize, len: usize },
    #[error("no root found from {starts} starts")]
    NonConvergence { starts: usize },
    #[error("cannot parse `{input}` as a number or rational")]
    Parse { input: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
