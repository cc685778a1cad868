//! Syntactic `⊥`-elimination.
//!
//! * `A^π` replaces every `⊥` in `A` by the conjunction `π^∧` of the
//!   variables in `π`;
//! * the Wajsberg reduction `W(A, π, p) = (p → π^∧) → A^p`;
//! * the lift `σ^π` of a substitution, mapping `v ↦ σ(v)^π`. For positive
//!   `A` with `π(A) ⊆ π` it satisfies `(σ(A))^π = σ^π(A)` literally.

use thiserror::Error;

use crate::formula::{Formula, MRule, Name, Substitution, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("the variable set π must be nonempty")]
    EmptyPi,
    #[error("fresh variable {0} is not a member of π")]
    FreshNotInPi(Name),
    #[error("fresh variable {0} occurs in the formula")]
    FreshOccurs(Name),
    #[error("variable {0} of the formula is not in π")]
    VarOutsidePi(Name),
}

/// The pair `(π, p)` used by the Wajsberg reduction, with `p ∈ π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionContext {
    pi: VarSet,
    fresh: Name,
}

impl ReductionContext {
    pub fn new(pi: VarSet, fresh: &str) -> Result<ReductionContext, ReductionError> {
        if pi.is_empty() {
            return Err(ReductionError::EmptyPi);
        }
        if !pi.contains(fresh) {
            return Err(ReductionError::FreshNotInPi(Name::from(fresh)));
        }
        Ok(ReductionContext { pi, fresh: Name::from(fresh) })
    }

    /// `π = π(A) ∪ {w}` with `w` the first unused `w0, w1, …`.
    pub fn for_formula(f: &Formula) -> ReductionContext {
        Self::around(f.free_vars())
    }

    /// `π` covering every variable of the rule and of the substitution's
    /// images (and domain), plus one fresh variable.
    pub fn for_rule(rule: &MRule, sigma: Option<&Substitution>) -> ReductionContext {
        let mut vars = rule.free_vars();
        if let Some(s) = sigma {
            vars.extend_from(&s.domain());
            vars.extend_from(&s.image_vars());
        }
        Self::around(vars)
    }

    fn around(mut vars: VarSet) -> ReductionContext {
        let fresh = vars.fresh();
        vars.insert(&fresh);
        ReductionContext { pi: vars, fresh }
    }

    pub fn pi(&self) -> &VarSet {
        &self.pi
    }

    pub fn fresh(&self) -> &str {
        &self.fresh
    }
}

/// `π^∧`: the left-associated conjunction of `π` in canonical order.
pub fn conj_of(pi: &VarSet) -> Result<Formula, ReductionError> {
    Formula::conjunction(pi.iter().map(|v| Formula::Var(v.clone()))).ok_or(ReductionError::EmptyPi)
}

/// `A^π`.
pub fn reduce_by_pi(f: &Formula, pi: &VarSet) -> Result<Formula, ReductionError> {
    Ok(f.replace_bottom(&conj_of(pi)?))
}

/// `W(A, π, p) = (p → π^∧) → A^p`.
pub fn wajsberg_reduce(f: &Formula, ctx: &ReductionContext) -> Result<Formula, ReductionError> {
    let vars = f.free_vars();
    if vars.contains(&ctx.fresh) {
        return Err(ReductionError::FreshOccurs(ctx.fresh.clone()));
    }
    if let Some(v) = vars.iter().find(|v| !ctx.pi.contains(v)) {
        return Err(ReductionError::VarOutsidePi(v.clone()));
    }
    let p = Formula::Var(ctx.fresh.clone());
    let guard = Formula::imp(p.clone(), conj_of(&ctx.pi)?);
    Ok(Formula::imp(guard, f.replace_bottom(&p)))
}

/// `σ^π`: every image reduced by `π`.
pub fn lift_substitution(s: &Substitution, pi: &VarSet) -> Result<Substitution, ReductionError> {
    let conj = conj_of(pi)?;
    Ok(s.map_images(|img| img.replace_bottom(&conj)))
}
