//! Abstract structure data for a pair (G, K) and the block-coefficient
//! representation of metrics and prescribed tensors.
//!
//! Everything is stored relative to the background form Q, so Q itself is the
//! all-ones coefficient vector. The isotropy complement `a` is assumed to be
//! Ad(K)-irreducible; that assumption is the caller's and is not checked.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One summand k_i of the isotropy algebra: a simple ideal (kappa > 0) or a
/// one-dimensional central summand (kappa = 0).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Block {
    pub d: u32,
    pub kappa: f64,
}

impl Block {
    pub fn is_central(&self) -> bool {
        self.kappa == 0.0
    }

    /// d_i (1 - kappa_i), the weight that appears throughout the curvature formulas.
    pub fn defect(&self) -> f64 {
        self.d as f64 * (1.0 - self.kappa)
    }
}

/// The pair (G, K) reduced to `n = dim a` and the list of blocks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureData {
    n: u32,
    blocks: Vec<Block>,
}

impl StructureData {
    pub fn new(n: u32, blocks: &[(u32, f64)]) -> Result<Self> {
        make_structure(n, blocks)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of blocks with kappa > 0.
    pub fn r(&self) -> usize {
        self.blocks.iter().filter(|b| !b.is_central()).count()
    }

    /// Number of central blocks.
    pub fn s(&self) -> usize {
        self.blocks.iter().filter(|b| b.is_central()).count()
    }

    pub fn total_dimension(&self) -> u32 {
        total_dimension(self)
    }

    /// `Σ d_i (1 - kappa_i)` over all blocks.
    pub fn total_defect(&self) -> f64 {
        self.blocks.iter().map(Block::defect).sum()
    }

    pub(crate) fn check_len(&self, found: usize) -> Result<()> {
        if found == self.blocks.len() {
            Ok(())
        } else {
            Err(Error::ShapeMismatch { expected: self.blocks.len(), found })
        }
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.blocks.len() {
            Ok(())
        } else {
            Err(Error::InvalidIndex { index, len: self.blocks.len() })
        }
    }
}

/// Validates raw `(d, kappa)` pairs into a [`StructureData`].
pub fn make_structure(n: u32, blocks: &[(u32, f64)]) -> Result<StructureData> {
    if n == 0 {
        return Err(Error::ZeroComplement);
    }
    if blocks.is_empty() {
        return Err(Error::EmptyStructure);
    }
    let mut out = Vec::with_capacity(blocks.len());
    for (index, &(d, kappa)) in blocks.iter().enumerate() {
        if d == 0 {
            return Err(Error::ZeroBlockDimension { index });
        }
        if !(0.0..1.0).contains(&kappa) {
            return Err(Error::KappaOutOfRange { index, kappa });
        }
        if kappa == 0.0 && d != 1 {
            return Err(Error::CentralBlockNotOneDim { index, d });
        }
        out.push(Block { d, kappa });
    }
    Ok(StructureData { n, blocks: out })
}

/// `d = n + Σ d_i = dim g`.
pub fn total_dimension(sd: &StructureData) -> u32 {
    sd.n + sd.blocks.iter().map(|b| b.d).sum::<u32>()
}

/// A naturally reductive metric `α Q|_a + Σ α_i Q|_{k_i}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricCoefficients {
    alpha_a: f64,
    alphas: Vec<f64>,
}

impl MetricCoefficients {
    pub fn new(alpha_a: f64, alphas: Vec<f64>) -> Result<Self> {
        check_positive("alpha", alpha_a)?;
        for (i, &a) in alphas.iter().enumerate() {
            check_positive(&format!("alpha_{}", i + 1), a)?;
        }
        Ok(Self { alpha_a, alphas })
    }

    /// The background metric Q for `sd`.
    pub fn background(sd: &StructureData) -> Self {
        Self { alpha_a: 1.0, alphas: vec![1.0; sd.len()] }
    }

    pub fn alpha_a(&self) -> f64 {
        self.alpha_a
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        Self::new(self.alpha_a * lambda, self.alphas.iter().map(|a| a * lambda).collect())
    }

    /// Ratios `x_i = α_i / α`, on which the Ricci coefficients depend.
    pub fn ratios(&self) -> Vec<f64> {
        self.alphas.iter().map(|a| a / self.alpha_a).collect()
    }

    /// The same coefficients read as a tensor.
    pub fn as_tensor(&self) -> PrescribedTensor {
        PrescribedTensor { t_a: self.alpha_a, ts: self.alphas.clone() }
    }
}

fn check_positive(name: &str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveCoefficient { name: name.to_string(), value })
    }
}

/// The prescribed tensor `T = T_a Q|_a + Σ T_i Q|_{k_i}`.
///
/// Every `T_i` must be positive. `T_a = 0` is admitted; operations that need
/// `T_a > 0` report [`Error::DegenerateTa`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrescribedTensor {
    t_a: f64,
    ts: Vec<f64>,
}

impl PrescribedTensor {
    pub fn new(t_a: f64, ts: Vec<f64>) -> Result<Self> {
        if !(t_a >= 0.0 && t_a.is_finite()) {
            return Err(Error::InvalidTensor {
                name: "T_a".into(),
                value: t_a,
                reason: "must be finite and nonnegative",
            });
        }
        for (i, &t) in ts.iter().enumerate() {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::InvalidTensor {
                    name: format!("T_{}", i + 1),
                    value: t,
                    reason: "must be finite and positive",
                });
            }
        }
        Ok(Self { t_a, ts })
    }

    /// The background form Q as a tensor for `sd`.
    pub fn background(sd: &StructureData) -> Self {
        Self { t_a: 1.0, ts: vec![1.0; sd.len()] }
    }

    pub fn t_a(&self) -> f64 {
        self.t_a
    }

    pub fn ts(&self) -> &[f64] {
        &self.ts
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        Self::new(self.t_a * lambda, self.ts.iter().map(|t| t * lambda).collect())
    }

    pub(crate) fn require_positive_ta(&self) -> Result<()> {
        if self.t_a > 0.0 {
            Ok(())
        } else {
            Err(Error::DegenerateTa)
        }
    }

    /// The rescaling with `T_a = 1`. Solvability and the ratio solution are
    /// invariant under this rescaling.
    pub(crate) fn normalized(&self) -> Result<(Self, f64)> {
        self.require_positive_ta()?;
        let scale = self.t_a;
        Ok((self.scaled(1.0 / scale)?, scale))
    }
}

/// `tr_Q T = n T_a + Σ d_i T_i`.
pub fn trace_q(sd: &StructureData, t: &PrescribedTensor) -> Result<f64> {
    sd.check_len(t.ts.len())?;
    Ok(sd.n as f64 * t.t_a
        + sd.blocks.iter().zip(&t.ts).map(|(b, &ti)| b.d as f64 * ti).sum::<f64>())
}
