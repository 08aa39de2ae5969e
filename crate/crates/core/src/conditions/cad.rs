use serde::Serialize;

use crate::error::{Error, Result};

/// Where `(T_1, T_2)` sits relative to the exact solvability region of the
/// SO(6)/(SO(3)xSO(3)) instance with `T_a = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CadMembership {
    Inside,
    Outside,
    /// The interval for this `T_1` is empty.
    Empty,
}

/// Open interval of `T_2` values for which a solution exists at the given
/// `T_1` (with `T_a = 1`), or `None` when it is empty.
pub fn cad_interval_so6(t1: f64) -> Result<Option<(f64, f64)>> {
    if !(t1 > 0.0 && t1.is_finite()) {
        return Err(Error::NonPositiveT1(t1));
    }
    let disc = t1 * t1 + 24.0 * t1 - 3.0;
    if disc < 0.0 {
        return Ok(None);
    }
    let lo = (12.0 + t1 + disc.sqrt()) / 98.0;
    let hi = (196.0 * t1 * t1 - 48.0 * t1 + 3.0) / (4.0 * t1);
    Ok((lo < hi).then_some((lo, hi)))
}

pub fn cad_membership_so6(t1: f64, t2: f64) -> Result<CadMembership> {
    Ok(match cad_interval_so6(t1)? {
        None => CadMembership::Empty,
        Some((lo, hi)) if lo < t2 && t2 < hi => CadMembership::Inside,
        Some(_) => CadMembership::Outside,
    })
}
