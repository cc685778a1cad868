//! Theoremhood in `Int`, `Int⁺`, and (bounded) in `Int + Γ`.
//!
//! [`prove_int`] and [`prove_positive`] are decision procedures; their
//! `NotProvable` answers carry, when one exists among the enumerated
//! algebras of the countermodel bound, the smallest refuting algebra and
//! its first refuting valuation. [`prove_ext`] combines proof search from
//! axiom instances with a bounded countermodel search and may answer
//! `Unknown`.

mod g4ip;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{heyting_catalog, FiniteAlgebra, Validity, Valuation};
use crate::formula::{Formula, Substitution};

/// Algebras up to this size are searched for countermodels.
pub const COUNTERMODEL_SIZE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProverError {
    #[error("formula {0} is not positive")]
    NotPositive(Formula),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProofStatus {
    Provable,
    NotProvable,
    Unknown,
}

impl fmt::Display for ProofStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProofStatus::Provable => "provable",
            ProofStatus::NotProvable => "not provable",
            ProofStatus::Unknown => "unknown",
        })
    }
}

/// A finite algebra together with a valuation refuting some formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Countermodel {
    pub algebra: FiniteAlgebra,
    pub valuation: Valuation,
}

impl fmt::Display for Countermodel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.algebra.name(), self.valuation.display_in(&self.algebra))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofResult {
    pub status: ProofStatus,
    pub countermodel: Option<Countermodel>,
}

impl ProofResult {
    fn provable() -> ProofResult {
        ProofResult { status: ProofStatus::Provable, countermodel: None }
    }

    fn not_provable(countermodel: Option<Countermodel>) -> ProofResult {
        ProofResult { status: ProofStatus::NotProvable, countermodel }
    }

    fn unknown() -> ProofResult {
        ProofResult { status: ProofStatus::Unknown, countermodel: None }
    }
}

/// Limits for the bounded searches of this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Largest algebra searched for countermodels.
    pub max_algebra_size: usize,
    /// Largest formula (in binary connectives) used as a substitution image.
    pub max_formula_size: usize,
    /// Number of fresh variables substitution images are built from.
    pub pool_size: usize,
    /// Cap on instances (axiom instances, substitutions) tried.
    pub max_instances: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_algebra_size: 6, max_formula_size: 7, pool_size: 2, max_instances: 500 }
    }
}

/// `f ∈ Int`, without countermodel search.
pub fn is_int_theorem(f: &Formula) -> bool {
    g4ip::provable(f)
}

/// `f ∈ Int⁺` for positive `f`.
pub fn is_positive_theorem(f: &Formula) -> Result<bool, ProverError> {
    if !f.is_positive() {
        return Err(ProverError::NotPositive(f.clone()));
    }
    Ok(g4ip::provable(f))
}

/// The first algebra in `algebras` (in order) refuting `f`, with its first
/// refuting valuation. Algebras that cannot interpret `f` are skipped.
pub fn find_countermodel<'a>(
    f: &Formula,
    algebras: impl IntoIterator<Item = &'a FiniteAlgebra>,
) -> Option<Countermodel> {
    algebras.into_iter().find_map(|alg| match alg.validates_formula(f) {
        Ok(Validity::Refuted(valuation)) => Some(Countermodel { algebra: alg.clone(), valuation }),
        _ => None,
    })
}

pub fn prove_int(f: &Formula) -> ProofResult {
    if is_int_theorem(f) {
        ProofResult::provable()
    } else {
        ProofResult::not_provable(find_countermodel(f, &heyting_catalog(COUNTERMODEL_SIZE)))
    }
}

/// Decides `Int⁺`; countermodels are Brouwerian reducts.
pub fn prove_positive(f: &Formula) -> Result<ProofResult, ProverError> {
    Ok(if is_positive_theorem(f)? {
        ProofResult::provable()
    } else {
        let reducts: Vec<FiniteAlgebra> =
            heyting_catalog(COUNTERMODEL_SIZE).iter().map(FiniteAlgebra::brouwerian_reduct).collect();
        ProofResult::not_provable(find_countermodel(f, &reducts))
    })
}

/// Bounded semi-decision for `Int + axioms`.
///
/// `Provable` when `f ∈ Int` or `I → f ∈ Int` for one axiom instance `I`
/// or a conjunction of two; instances substitute variables and
/// subformulas of `f` into the axioms, smallest first, at most
/// `budget.max_instances` of them. `NotProvable` when a Heyting algebra of
/// at most `budget.max_algebra_size` elements validates every axiom and
/// refutes `f`. Otherwise `Unknown`.
pub fn prove_ext(axioms: &[Formula], f: &Formula, budget: &SearchBudget) -> Result<ProofResult, ProverError> {
    if let Some(a) = axioms.iter().find(|a| !a.is_positive()) {
        return Err(ProverError::NotPositive(a.clone()));
    }
    if is_int_theorem(f) {
        return Ok(ProofResult::provable());
    }
    let models = heyting_catalog(budget.max_algebra_size);
    let members =
        models.iter().filter(|alg| axioms.iter().all(|a| alg.validates_formula(a).is_ok_and(|v| v.is_valid())));
    if let Some(cm) = find_countermodel(f, members) {
        return Ok(ProofResult::not_provable(Some(cm)));
    }
    let instances = axiom_instances(axioms, f, budget.max_instances);
    let mut checks = 0;
    for (i, a) in instances.iter().enumerate() {
        if is_int_theorem(&Formula::imp(a.clone(), f.clone())) {
            return Ok(ProofResult::provable());
        }
        for b in &instances[..i] {
            if checks >= budget.max_instances {
                return Ok(ProofResult::unknown());
            }
            checks += 1;
            let both = Formula::and(b.clone(), a.clone());
            if is_int_theorem(&Formula::imp(both, f.clone())) {
                return Ok(ProofResult::provable());
            }
        }
    }
    Ok(ProofResult::unknown())
}

/// Substitution instances of `axioms` whose images are variables and
/// subformulas of `goal`, ordered by image size, deduplicated.
fn axiom_instances(axioms: &[Formula], goal: &Formula, cap: usize) -> Vec<Formula> {
    let mut images: Vec<Formula> = goal.subformulas().into_iter().filter(|s| !s.is_bottom()).collect();
    images.extend(goal.free_vars().iter().map(|v| Formula::Var(v.clone())));
    images.sort_by_key(|s| (s.binary_size(), s.clone()));
    images.dedup();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for ax in axioms {
        let vars: Vec<_> = ax.free_vars().iter().cloned().collect();
        // Tuples of image indices in order of increasing index sum.
        let k = vars.len();
        let max_sum = k * images.len().saturating_sub(1);
        for sum in 0..=max_sum {
            let mut tuple = vec![0usize; k];
            for_each_tuple_with_sum(&mut tuple, 0, sum, images.len(), &mut |t| {
                if out.len() >= cap {
                    return;
                }
                let sigma: Substitution = vars.iter().zip(t).map(|(v, &i)| (v.clone(), images[i].clone())).collect();
                let inst = sigma.apply(ax);
                if seen.insert(inst.clone()) {
                    out.push(inst);
                }
            });
            if out.len() >= cap {
                return out;
            }
        }
    }
    out
}

fn for_each_tuple_with_sum(
    tuple: &mut Vec<usize>,
    pos: usize,
    remaining: usize,
    bound: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if pos == tuple.len() {
        if remaining == 0 {
            visit(tuple);
        }
        return;
    }
    for i in 0..bound.min(remaining + 1) {
        tuple[pos] = i;
        for_each_tuple_with_sum(tuple, pos + 1, remaining - i, bound, visit);
    }
}
