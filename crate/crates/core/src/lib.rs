//! Algebraic and proof-theoretic tooling for positive (`⊥`-free)
//! superintuitionistic logics.
//!
//! The crate is organized bottom-up:
//!
//! * [`formula`]: formulas, substitutions, multiple-conclusion rules;
//! * [`corpus`]: the reference formula corpus used by the checks;
//! * [`reduction`]: `⊥`-elimination by conjunctions of variables and the
//!   Wajsberg reduction;
//! * [`prover`]: decision procedures for `Int` and `Int⁺`, plus a bounded
//!   procedure for `Int + Γ`;
//! * [`algebra`]: finite Brouwerian and Heyting algebras as operation tables;
//! * [`variety`]: variety membership and bounded B-saturation checks;
//! * [`admissibility`]: unifiers, admissibility falsification, semantic
//!   consequence between rules.

pub mod admissibility;
pub mod algebra;
pub mod corpus;
pub mod formula;
pub mod prover;
pub mod reduction;
pub mod variety;

pub use algebra::{FiniteAlgebra, Valuation};
pub use formula::{parse_formula, Formula, MRule, Substitution, VarSet};
pub use prover::{ProofResult, ProofStatus};

#[cfg(test)]
pub(crate) mod testing;
