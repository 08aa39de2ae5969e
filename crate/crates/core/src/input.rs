//! JSON input schema for structures, tensors and solver configs.
//!
//! Reals may be written as JSON numbers or as strings holding an exact
//! rational (`"13/100"`) or decimal (`"0.13"`). Strings are parsed exactly and
//! rounded once to the nearest `f64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Deserialize;

use crate::catalog::catalog_lookup;
use crate::error::{Error, Result};
use crate::solver::SolverOptions;
use crate::structure::{make_structure, PrescribedTensor, StructureData};

/// Parses an exact rational or decimal literal.
pub fn parse_rational(input: &str) -> Result<BigRational> {
    let err = || Error::Parse { input: input.to_string() };
    let s = input.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = parse_decimal(p.trim()).ok_or_else(err)?;
        let q = parse_decimal(q.trim()).ok_or_else(err)?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(p / q);
    }
    parse_decimal(s).ok_or_else(err)
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (mantissa, exp) = match body.find(['e', 'E']) {
        Some(pos) => (&body[..pos], body[pos + 1..].parse::<i32>().ok()?),
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("0{int_part}{frac_part}").parse().ok()?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(digits);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if neg { -value } else { value })
}

/// Parses a literal and rounds it to `f64`.
pub fn parse_real(input: &str) -> Result<f64> {
    parse_rational(input)?.to_f64().ok_or_else(|| Error::Parse { input: input.to_string() })
}

/// A real given either as a JSON number or as an exact literal string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Real {
    Number(f64),
    Literal(String),
}

impl Real {
    pub fn value(&self) -> Result<f64> {
        match self {
            Real::Number(x) => Ok(*x),
            Real::Literal(s) => parse_real(s),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct BlockSpec {
    pub d: u32,
    pub kappa: Real,
}

#[derive(Debug, Clone, Deserialize)]
pub struct StructureSpec {
    pub n: u32,
    pub blocks: Vec<BlockSpec>,
    #[serde(default)]
    pub name: Option<String>,
}

impl StructureSpec {
    pub fn build(&self) -> Result<StructureData> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| Ok((b.d, b.kappa.value()?)))
            .collect::<Result<Vec<_>>>()?;
        make_structure(self.n, &blocks)
    }
}

/// Either a catalog key or an inline structure.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum StructureRef {
    Named(String),
    Inline(StructureSpec),
}

impl StructureRef {
    pub fn build(&self) -> Result<StructureData> {
        match self {
            StructureRef::Named(name) => catalog_lookup(name),
            StructureRef::Inline(spec) => spec.build(),
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            StructureRef::Named(name) => Some(name),
            StructureRef::Inline(spec) => spec.name.as_deref(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct TensorSpec {
    pub t_a: Real,
    pub ts: Vec<Real>,
}

impl TensorSpec {
    pub fn build(&self) -> Result<PrescribedTensor> {
        let ts = self.ts.iter().map(Real::value).collect::<Result<Vec<_>>>()?;
        PrescribedTensor::new(self.t_a.value()?, ts)
    }
}

/// A full problem description: `{structure, tensor, solver_opts}`.
#[derive(Debug, Clone, Deserialize)]
pub struct ProblemConfig {
    pub structure: StructureRef,
    pub tensor: TensorSpec,
    #[serde(default)]
    pub solver_opts: SolverOptions,
}

/// A validated problem.
#[derive(Debug, Clone)]
pub struct Problem {
    pub structure: StructureData,
    pub tensor: PrescribedTensor,
    pub options: SolverOptions,
}

impl ProblemConfig {
    pub fn build(&self) -> Result<Problem> {
        let structure = self.structure.build()?;
        let tensor = self.tensor.build()?;
        structure.check_len(tensor.ts().len())?;
        Ok(Problem { structure, tensor, options: self.solver_opts.clone() })
    }
}
