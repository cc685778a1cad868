//! Instance checks of the positive-transfer theorem for admissibility.
//!
//! For `L = Int + P` with positive `P`, a substitution `σ` and its lift
//! `σ^π` (every `⊥` in an image replaced by `π^∧`), the reduction theorem
//! predicts that `σ(A) ∈ L` exactly when `σ^π(A) = σ(A)^π` belongs to the
//! positive logic, for every formula `A` of the rule. A report records both
//! sides for each premise and conclusion and flags any disagreement.

use std::fmt;

use super::AdmissibilityError;
use crate::formula::{Formula, MRule, Substitution, VarSet};
use crate::prover::{is_int_theorem, prove_ext, ProofStatus, SearchBudget};
use crate::reduction::{lift_substitution, reduce_by_pi, ReductionContext};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferLine {
    /// `σ(A)`.
    pub image: Formula,
    /// `σ^π(A)`.
    pub lifted: Formula,
    /// Status of `σ(A)` in `L`.
    pub status_l: ProofStatus,
    /// Status of `σ^π(A)` in the positive logic.
    pub status_p: ProofStatus,
    /// Whether `σ^π(A)` coincides with `σ(A)^π`.
    pub reduction_agrees: bool,
}

impl TransferLine {
    pub fn contradicts(&self) -> bool {
        let definite = |s| s != ProofStatus::Unknown;
        !self.reduction_agrees || (definite(self.status_l) && definite(self.status_p) && self.status_l != self.status_p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub pi: VarSet,
    pub lifted: Substitution,
    pub lifted_is_positive: bool,
    pub premises: Vec<TransferLine>,
    pub conclusions: Vec<TransferLine>,
}

/// `Some(true)` if all statuses are provable, `Some(false)` if one is
/// refuted, `None` otherwise.
fn all_of(lines: &[TransferLine], side: impl Fn(&TransferLine) -> ProofStatus) -> Option<bool> {
    if lines.iter().any(|l| side(l) == ProofStatus::NotProvable) {
        Some(false)
    } else if lines.iter().all(|l| side(l) == ProofStatus::Provable) {
        Some(true)
    } else {
        None
    }
}

fn any_of(lines: &[TransferLine], side: impl Fn(&TransferLine) -> ProofStatus) -> Option<bool> {
    if lines.iter().any(|l| side(l) == ProofStatus::Provable) {
        Some(true)
    } else if lines.iter().all(|l| side(l) == ProofStatus::NotProvable) {
        Some(false)
    } else {
        None
    }
}

impl TransferReport {
    /// Whether `σ` unifies the premises in `L` (`None`: undecided).
    pub fn sigma_unifies_premises(&self) -> Option<bool> {
        all_of(&self.premises, |l| l.status_l)
    }

    /// Whether `σ^π` unifies the premises in the positive logic.
    pub fn lifted_unifies_premises(&self) -> Option<bool> {
        all_of(&self.premises, |l| l.status_p)
    }

    /// Whether `σ` unifies some conclusion in `L`.
    pub fn sigma_unifies_conclusion(&self) -> Option<bool> {
        any_of(&self.conclusions, |l| l.status_l)
    }

    /// Whether `σ^π` unifies some conclusion in the positive logic.
    pub fn lifted_unifies_conclusion(&self) -> Option<bool> {
        any_of(&self.conclusions, |l| l.status_p)
    }

    /// True when some definite prediction of the theorem fails.
    pub fn has_contradiction(&self) -> bool {
        let clash = |a: Option<bool>, b: Option<bool>| matches!((a, b), (Some(x), Some(y)) if x != y);
        !self.lifted_is_positive
            || self.premises.iter().chain(&self.conclusions).any(TransferLine::contradicts)
            || clash(self.sigma_unifies_premises(), self.lifted_unifies_premises())
            || clash(self.sigma_unifies_conclusion(), self.lifted_unifies_conclusion())
    }
}

impl fmt::Display for TransferReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pi = {}", self.pi)?;
        writeln!(f, "lifted substitution: {}", self.lifted)?;
        for (title, lines) in [("premise", &self.premises), ("conclusion", &self.conclusions)] {
            for l in lines {
                writeln!(
                    f,
                    "{title}: {} [{}] | {} [{}]{}",
                    l.image,
                    l.status_l,
                    l.lifted,
                    l.status_p,
                    if l.contradicts() { "  CONTRADICTION" } else { "" }
                )?;
            }
        }
        let show = |o: Option<bool>| match o {
            Some(true) => "yes",
            Some(false) => "no",
            None => "unknown",
        };
        writeln!(
            f,
            "premises unified: {} | {}",
            show(self.sigma_unifies_premises()),
            show(self.lifted_unifies_premises())
        )?;
        write!(
            f,
            "some conclusion unified: {} | {}",
            show(self.sigma_unifies_conclusion()),
            show(self.lifted_unifies_conclusion())
        )
    }
}

/// Evaluates `σ` in `L = Int + p_axioms` and `σ^π` in `Int⁺ + p_axioms` on
/// every formula of `r`, with `π` covering the rule, `σ`, and one fresh
/// variable.
pub fn check_transfer_instance(
    p_axioms: &[Formula],
    r: &MRule,
    sigma: &Substitution,
    budget: &SearchBudget,
) -> Result<TransferReport, AdmissibilityError> {
    if let Some(f) = p_axioms.iter().chain(r.formulas()).find(|f| !f.is_positive()) {
        return Err(AdmissibilityError::NotPositive(f.clone()));
    }
    let status = |f: &Formula| -> Result<ProofStatus, AdmissibilityError> {
        Ok(if p_axioms.is_empty() {
            if is_int_theorem(f) {
                ProofStatus::Provable
            } else {
                ProofStatus::NotProvable
            }
        } else {
            prove_ext(p_axioms, f, budget)?.status
        })
    };
    let ctx = ReductionContext::for_rule(r, Some(sigma));
    let pi = ctx.pi().clone();
    let lifted = lift_substitution(sigma, &pi)?;
    let line = |a: &Formula| -> Result<TransferLine, AdmissibilityError> {
        let image = sigma.apply(a);
        let lifted_image = lifted.apply(a);
        Ok(TransferLine {
            reduction_agrees: reduce_by_pi(&image, &pi)? == lifted_image,
            status_l: status(&image)?,
            status_p: status(&lifted_image)?,
            image,
            lifted: lifted_image,
        })
    };
    Ok(TransferReport {
        lifted_is_positive: lifted.is_positive(),
        premises: r.premises().iter().map(line).collect::<Result<_, _>>()?,
        conclusions: r.conclusions().iter().map(line).collect::<Result<_, _>>()?,
        pi,
        lifted,
    })
}
