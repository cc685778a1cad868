//! The reference formula corpus: every formula over `{p, q}` up to a
//! connective bound, followed by seeded random formulas over `{p, q, r}`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formula::{formulas_with_connectives, Formula};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    /// Exhaustive part: all formulas over `{p, q}` with at most this many
    /// connectives (`⊥` counted as one).
    pub max_connectives: usize,
    /// Number of distinct random formulas over `{p, q, r}`.
    pub random: usize,
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { max_connectives: 5, random: 50, seed: 1957 }
    }
}

/// A random formula with exactly `connectives` connectives; `⊥` leaves
/// appear with probability 1/4 where one connective remains.
pub fn random_formula(rng: &mut impl Rng, vars: &[&str], connectives: usize) -> Formula {
    match connectives {
        0 => Formula::var(vars[rng.gen_range(0..vars.len())]),
        1 if rng.gen_ratio(1, 4) => Formula::Bottom,
        c => {
            let left = rng.gen_range(0..c);
            let l = random_formula(rng, vars, left);
            let r = random_formula(rng, vars, c - 1 - left);
            match rng.gen_range(0..3) {
                0 => Formula::and(l, r),
                1 => Formula::or(l, r),
                _ => Formula::imp(l, r),
            }
        }
    }
}

/// The exhaustive part in enumeration order, then the random part.
pub fn corpus(spec: &CorpusSpec) -> Vec<Formula> {
    let mut out: Vec<Formula> =
        (0..=spec.max_connectives).flat_map(|c| formulas_with_connectives(&["p", "q"], c)).collect();
    let mut seen: BTreeSet<Formula> = out.iter().cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut added = 0;
    while added < spec.random {
        let size = rng.gen_range(3..=9);
        let f = random_formula(&mut rng, &["p", "q", "r"], size);
        if seen.insert(f.clone()) {
            out.push(f);
            added += 1;
        }
    }
    out
}
