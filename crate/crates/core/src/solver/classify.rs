use serde::Serialize;

use crate::catalog::is_so6_diag;
use crate::conditions::{
    cad_membership_so6, necessary_condition, simple_k_solvable, sufficient_condition, CadMembership,
    ConditionVerdict,
};
use crate::error::{Error, Result};
use crate::structure::{PrescribedTensor, StructureData};

use super::{maximize_scalar, solve_simple_k, SolveOutcome, SolveStatus, SolverOptions};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Classification {
    /// `None` when the structure has no block with kappa > 0.
    pub sufficient: Option<ConditionVerdict>,
    pub necessary: Option<ConditionVerdict>,
    pub simple_k: Option<ConditionVerdict>,
    pub outcome: SolveOutcome,
    /// Only for the SO(6)/(SO(3)xSO(3)) instance, after rescaling to `T_a = 1`.
    pub cad: Option<CadMembership>,
    /// Sufficient condition implies a solution, and a certificate excludes it.
    pub consistent: bool,
}

/// Runs every applicable condition and the solver on one instance.
///
/// Simple-K structures use the exact bisection path; everything else goes
/// through [`maximize_scalar`].
pub fn classify(sd: &StructureData, t: &PrescribedTensor, opts: &SolverOptions) -> Result<Classification> {
    sd.check_len(t.ts().len())?;
    let optional = |r: Result<ConditionVerdict>| match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::NoSimpleBlocks) | Err(Error::NotSimpleK { .. }) => Ok(None),
        Err(e) => Err(e),
    };
    let sufficient = optional(sufficient_condition(sd, t))?;
    let necessary = if t.t_a() > 0.0 { optional(necessary_condition(sd, t))? } else { None };
    let simple_k = optional(simple_k_solvable(sd, t))?;

    let outcome = if simple_k.is_some() { solve_simple_k(sd, t)? } else { maximize_scalar(sd, t, opts)? };

    let cad = if is_so6_diag(sd) && t.t_a() > 0.0 {
        Some(cad_membership_so6(t.ts()[0] / t.t_a(), t.ts()[1] / t.t_a())?)
    } else {
        None
    };

    let found = outcome.status == SolveStatus::SolutionFound;
    let certified = outcome.status == SolveStatus::CertifiedNoSolution;
    let consistent = !(sufficient.is_some_and(|v| v.holds) && !found)
        && !(certified && sufficient.is_some_and(|v| v.holds))
        && !(found && necessary.is_some_and(|v| !v.holds));

    Ok(Classification { sufficient, necessary, simple_k, outcome, cad, consistent })
}
