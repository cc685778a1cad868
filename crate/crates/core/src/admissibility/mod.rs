//! Unification and admissibility over `Int`, `Int⁺` and `Int + P`.
//!
//! Non-admissibility is certified by an explicit substitution that
//! unifies every premise and no conclusion; admissibility is never claimed,
//! only "no falsifier within the budget". Every reported witness has been
//! checked by the prover.

mod known;
mod search;
mod semantic;
mod transfer;

use thiserror::Error;

use crate::formula::{Formula, MRule, Substitution, VarSet};
pub use crate::prover::SearchBudget;
use crate::prover::{is_int_theorem, prove_ext, ProofStatus, ProverError};
use search::{search_substitutions, ImageStream};

pub use known::{known_rule, known_rules, KnownRule};
pub use semantic::{independence_check, semantic_follows, Dependence, Following};
pub use transfer::{check_transfer_instance, TransferLine, TransferReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdmissibilityError {
    #[error("{0} is not positive, but the logic is Int⁺")]
    NotPositive(Formula),
    #[error(transparent)]
    Prover(#[from] ProverError),
    #[error(transparent)]
    Eval(#[from] crate::algebra::EvalError),
    #[error(transparent)]
    Reduction(#[from] crate::reduction::ReductionError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogicKind {
    Int,
    IntPositive,
    /// `Int + P` for a set `P` of positive axioms.
    IntPlus(Vec<Formula>),
}

/// A logic together with the budget used when its theoremhood is only
/// semi-decidable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicHandle {
    kind: LogicKind,
    budget: SearchBudget,
}

impl LogicHandle {
    pub fn int() -> LogicHandle {
        LogicHandle { kind: LogicKind::Int, budget: SearchBudget::default() }
    }

    pub fn positive() -> LogicHandle {
        LogicHandle { kind: LogicKind::IntPositive, budget: SearchBudget::default() }
    }

    /// `Int + axioms`; an empty axiom set gives `Int`.
    pub fn plus(axioms: Vec<Formula>) -> Result<LogicHandle, AdmissibilityError> {
        if let Some(a) = axioms.iter().find(|a| !a.is_positive()) {
            return Err(ProverError::NotPositive(a.clone()).into());
        }
        if axioms.is_empty() {
            return Ok(LogicHandle::int());
        }
        Ok(LogicHandle { kind: LogicKind::IntPlus(axioms), budget: SearchBudget::default() })
    }

    pub fn with_budget(mut self, budget: SearchBudget) -> LogicHandle {
        self.budget = budget;
        self
    }

    pub fn kind(&self) -> &LogicKind {
        &self.kind
    }

    pub fn is_positive(&self) -> bool {
        self.kind == LogicKind::IntPositive
    }

    /// Theoremhood of `f`; `Unknown` only for `Int + P`.
    pub fn status(&self, f: &Formula) -> Result<ProofStatus, AdmissibilityError> {
        let yes_no = |b| if b { ProofStatus::Provable } else { ProofStatus::NotProvable };
        match &self.kind {
            LogicKind::Int => Ok(yes_no(is_int_theorem(f))),
            LogicKind::IntPositive => {
                self.require_positive(std::iter::once(f))?;
                Ok(yes_no(is_int_theorem(f)))
            }
            LogicKind::IntPlus(axioms) => Ok(prove_ext(axioms, f, &self.budget)?.status),
        }
    }

    fn require_positive<'a>(&self, mut formulas: impl Iterator<Item = &'a Formula>) -> Result<(), AdmissibilityError> {
        match formulas.find(|f| self.is_positive() && !f.is_positive()) {
            Some(f) => Err(AdmissibilityError::NotPositive(f.clone())),
            None => Ok(()),
        }
    }

    fn images(&self, avoid: &VarSet, budget: &SearchBudget) -> ImageStream {
        ImageStream::new(&avoid.fresh_pool(budget.pool_size), !self.is_positive(), budget.max_formula_size)
    }

    /// Whether every formula is provable; `None` when some status is
    /// unknown and none is refuted.
    fn all_provable(&self, formulas: &[Formula], s: &Substitution) -> Result<Option<bool>, AdmissibilityError> {
        let mut unknown = false;
        for f in formulas {
            match self.status(&s.apply(f))? {
                ProofStatus::Provable => {}
                ProofStatus::NotProvable => return Ok(Some(false)),
                ProofStatus::Unknown => unknown = true,
            }
        }
        Ok(if unknown { None } else { Some(true) })
    }
}

/// Whether `sigma` unifies every premise and certainly no conclusion.
pub fn is_falsifier(logic: &LogicHandle, r: &MRule, sigma: &Substitution) -> Result<bool, AdmissibilityError> {
    if logic.all_provable(r.premises(), sigma)? != Some(true) {
        return Ok(false);
    }
    for c in r.conclusions() {
        if logic.status(&sigma.apply(c))? != ProofStatus::NotProvable {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The first substitution in canonical order unifying every formula of
/// `gamma`; the identity for empty `gamma`.
pub fn find_unifier(
    logic: &LogicHandle,
    gamma: &[Formula],
    budget: &SearchBudget,
) -> Result<Option<Substitution>, AdmissibilityError> {
    logic.require_positive(gamma.iter())?;
    let vars: VarSet = gamma.iter().flat_map(|f| f.free_vars().iter().cloned().collect::<Vec<_>>()).collect();
    let domain: Vec<_> = vars.iter().cloned().collect();
    let mut images = logic.images(&vars, budget);
    let mut failure = None;
    let found =
        search_substitutions(&domain, &mut images, budget.max_instances, |s| match logic.all_provable(gamma, s) {
            Ok(Some(true)) => Some(s.clone()),
            Ok(_) => None,
            Err(e) => {
                failure = Some(e);
                Some(s.clone())
            }
        });
    if let Some(e) = failure {
        return Err(e);
    }
    if let Some(s) = &found {
        assert_eq!(logic.all_provable(gamma, s)?, Some(true), "unverified unifier {s}");
    }
    Ok(found)
}

/// The first substitution in canonical order unifying all premises of `r`
/// and none of its conclusions: a certificate that `r` is not admissible.
/// `None` means only that no certificate exists within the budget.
pub fn falsify_admissibility(
    logic: &LogicHandle,
    r: &MRule,
    budget: &SearchBudget,
) -> Result<Option<Substitution>, AdmissibilityError> {
    logic.require_positive(r.formulas())?;
    let vars = r.free_vars();
    let domain: Vec<_> = vars.iter().cloned().collect();
    let mut images = logic.images(&vars, budget);
    // With no premises every substitution is a unifier, and a conclusion
    // unified by the identity is a theorem unified by everything: the
    // identity decides.
    let domain: &[_] = if r.premises().is_empty() { &[] } else { &domain };
    let mut failure = None;
    let found = search_substitutions(domain, &mut images, budget.max_instances, |s| match is_falsifier(logic, r, s) {
        Ok(true) => Some(s.clone()),
        Ok(false) => None,
        Err(e) => {
            failure = Some(e);
            Some(s.clone())
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    if let Some(s) = &found {
        assert!(is_falsifier(logic, r, s)?, "unverified falsifier {s}");
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prover::prove_int;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    fn rule(s: &str) -> MRule {
        s.parse().unwrap()
    }

    #[test]
    fn unifier_examples() {
        let b = SearchBudget::default();
        let s = find_unifier(&LogicHandle::int(), &[f("p")], &b).unwrap().unwrap();
        assert_eq!(s.to_string(), "{p := q->q}");
        assert_eq!(find_unifier(&LogicHandle::int(), &[f("false")], &b).unwrap(), None);
        let s = find_unifier(&LogicHandle::positive(), &[f("p|q")], &b).unwrap().unwrap();
        assert!(is_int_theorem(&s.apply(&f("p|q"))));
        assert!(s.is_positive());
        assert_eq!(find_unifier(&LogicHandle::int(), &[], &b).unwrap(), Some(Substitution::identity()));
        assert!(find_unifier(&LogicHandle::positive(), &[f("~p")], &b).is_err());
    }

    #[test]
    fn falsifier_examples() {
        let b = SearchBudget::default();
        let r = rule("p|q / p");
        let s = falsify_admissibility(&LogicHandle::int(), &r, &b).unwrap().unwrap();
        assert_eq!(s.to_string(), "{p := false, q := r->r}");
        assert_eq!(prove_int(&s.apply(&f("p|q"))).status, ProofStatus::Provable);
        assert_eq!(prove_int(&s.apply(&f("p"))).status, ProofStatus::NotProvable);
        let s = falsify_admissibility(&LogicHandle::positive(), &r, &b).unwrap().unwrap();
        assert_eq!(s.to_string(), "{p := r, q := r->r}");
        assert_eq!(falsify_admissibility(&LogicHandle::int(), &rule("p|q / p, q"), &b).unwrap(), None);
    }

    #[test]
    fn edge_rules() {
        let b = SearchBudget::default();
        let int = LogicHandle::int();
        assert_eq!(falsify_admissibility(&int, &rule("/"), &b).unwrap(), Some(Substitution::identity()));
        assert_eq!(falsify_admissibility(&int, &rule("/ p->p"), &b).unwrap(), None);
        assert_eq!(falsify_admissibility(&int, &rule("/ p, q"), &b).unwrap(), Some(Substitution::identity()));
        let s = falsify_admissibility(&int, &rule("p /"), &b).unwrap().unwrap();
        assert_eq!(s.to_string(), "{p := q->q}");
        assert_eq!(falsify_admissibility(&int, &rule("false /"), &b).unwrap(), None);
    }

    #[test]
    fn derivable_rules_are_never_falsified() {
        let b = SearchBudget { max_instances: 200, ..Default::default() };
        for text in ["p, p->q / q", "p&q / p", "p / p|q", "p->q, q->r / p->r", "~~p->p / p|~p, q"] {
            let r = rule(text);
            let derivable = r.conclusions().iter().any(|c| {
                is_int_theorem(&Formula::imp(Formula::conjunction(r.premises().iter().cloned()).unwrap(), c.clone()))
            });
            if derivable {
                assert_eq!(falsify_admissibility(&LogicHandle::int(), &r, &b).unwrap(), None, "{text}");
            }
        }
    }

    #[test]
    fn extension_logic() {
        let lc = LogicHandle::plus(vec![f("(p->q)|(q->p)")]).unwrap();
        assert_eq!(lc.status(&f("(r->s)|(s->r)")).unwrap(), ProofStatus::Provable);
        assert_eq!(lc.status(&f("p|~p")).unwrap(), ProofStatus::NotProvable);
        let b = SearchBudget { max_instances: 100, ..Default::default() };
        let s = falsify_admissibility(&lc, &rule("p|q / p"), &b).unwrap().unwrap();
        assert_eq!(s.to_string(), "{p := false, q := r->r}");
        assert!(LogicHandle::plus(vec![f("p|~p")]).is_err());
        assert_eq!(LogicHandle::plus(vec![]).unwrap(), LogicHandle::int());
    }
}
