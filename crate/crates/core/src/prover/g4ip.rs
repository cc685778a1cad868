//! Contraction-free sequent search (Dyckhoff's G4ip).
//!
//! Invertible rules are applied eagerly while a sequent is saturated; the
//! only choice points are `∨R` and the `(C→D)→B` left rule, whose premises
//! are strictly smaller in the multiset weight ordering, so search
//! terminates without loop checking.
//!
//! The left rules for `⊥` fire only when `⊥` occurs, so the same engine
//! decides `Int⁺` on positive sequents: the calculus with every `⊥` rule
//! removed proves exactly the same positive sequents it reaches.

use std::sync::Arc;

use crate::formula::{Formula, Name};

type F = Arc<Formula>;

/// A saturated left-hand side: atoms, implications waiting for their atom,
/// and implications with an implicational antecedent `(C→D)→B`.
#[derive(Clone, Default)]
struct Sequent {
    atoms: Vec<Name>,
    atom_imps: Vec<(Name, F)>,
    imp_imps: Vec<(F, F, F)>,
    ors: Vec<(F, F)>,
}

/// Decides `⊢ goal` in intuitionistic logic.
pub(crate) fn provable(goal: &Formula) -> bool {
    prove(Vec::new(), Sequent::default(), Arc::new(goal.clone()))
}

fn prove(mut pending: Vec<F>, mut seq: Sequent, mut goal: F) -> bool {
    loop {
        // Left saturation.
        while let Some(h) = pending.pop() {
            match &*h {
                Formula::Bottom => return true,
                Formula::Var(p) => {
                    if matches!(&*goal, Formula::Var(g) if g == p) {
                        return true;
                    }
                    if !seq.atoms.contains(p) {
                        seq.atoms.push(p.clone());
                        let mut i = 0;
                        while i < seq.atom_imps.len() {
                            if seq.atom_imps[i].0 == *p {
                                pending.push(seq.atom_imps.swap_remove(i).1);
                            } else {
                                i += 1;
                            }
                        }
                    }
                }
                Formula::And(a, b) => {
                    pending.push(a.clone());
                    pending.push(b.clone());
                }
                Formula::Or(a, b) => seq.ors.push((a.clone(), b.clone())),
                Formula::Impl(a, b) => match &**a {
                    Formula::Var(p) => {
                        if seq.atoms.contains(p) {
                            pending.push(b.clone());
                        } else {
                            seq.atom_imps.push((p.clone(), b.clone()));
                        }
                    }
                    Formula::Bottom => {}
                    Formula::And(c, d) => {
                        pending.push(Arc::new(Formula::Impl(c.clone(), Arc::new(Formula::Impl(d.clone(), b.clone())))));
                    }
                    Formula::Or(c, d) => {
                        pending.push(Arc::new(Formula::Impl(c.clone(), b.clone())));
                        pending.push(Arc::new(Formula::Impl(d.clone(), b.clone())));
                    }
                    Formula::Impl(c, d) => seq.imp_imps.push((c.clone(), d.clone(), b.clone())),
                },
            }
        }
        // Right invertible rules.
        match &*goal {
            Formula::Impl(a, b) => {
                pending.push(a.clone());
                goal = b.clone();
                continue;
            }
            Formula::And(a, b) => {
                return prove(Vec::new(), seq.clone(), a.clone()) && prove(Vec::new(), seq, b.clone());
            }
            Formula::Var(g) if seq.atoms.contains(g) => return true,
            _ => {}
        }
        // ∨L is invertible; branch on the remaining disjunctions.
        if let Some((a, b)) = seq.ors.pop() {
            return prove(vec![a], seq.clone(), goal.clone()) && prove(vec![b], seq, goal);
        }
        break;
    }
    if let Formula::Or(a, b) = &*goal {
        if prove(Vec::new(), seq.clone(), a.clone()) || prove(Vec::new(), seq.clone(), b.clone()) {
            return true;
        }
    }
    for i in 0..seq.imp_imps.len() {
        let mut rest = seq.clone();
        let (c, d, b) = rest.imp_imps.remove(i);
        let db = Arc::new(Formula::Impl(d.clone(), b.clone()));
        let cd = Arc::new(Formula::Impl(c, d));
        if prove(vec![db], rest.clone(), cd) && prove(vec![b], rest, goal.clone()) {
            return true;
        }
    }
    false
}
