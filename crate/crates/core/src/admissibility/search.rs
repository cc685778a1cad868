//! Canonical enumeration of substitutions.
//!
//! Images are formulas over a pool of fresh variables, ordered by binary
//! size, then number of `⊥` occurrences, then structurally (`∧ < ∨ < →`,
//! left operand first); `⊥` itself comes first when the logic has it.
//! Substitutions on a domain `x1 < … < xk` are tuples of image ranks,
//! ordered by rank sum and then lexicographically.

use crate::formula::{Formula, Name, Substitution};

/// Lazily materialized list of candidate images in canonical order.
pub(crate) struct ImageStream {
    leaves: Vec<Formula>,
    max_size: usize,
    layers: Vec<Vec<Formula>>,
    ranked: Vec<Formula>,
}

impl ImageStream {
    pub(crate) fn new(pool: &[Name], with_bottom: bool, max_size: usize) -> ImageStream {
        let mut leaves: Vec<Formula> = Vec::new();
        if with_bottom {
            leaves.push(Formula::Bottom);
        }
        leaves.extend(pool.iter().map(|v| Formula::Var(v.clone())));
        ImageStream { leaves, max_size, layers: Vec::new(), ranked: Vec::new() }
    }

    fn grow(&mut self) -> bool {
        let n = self.layers.len();
        if n > self.max_size || (n == 0 && self.leaves.is_empty()) {
            return false;
        }
        let layer = if n == 0 {
            self.leaves.clone()
        } else {
            let mut layer = Vec::new();
            for left in 0..n {
                let right = n - 1 - left;
                for op in [Formula::and, Formula::or, Formula::imp] {
                    for l in &self.layers[left] {
                        for r in &self.layers[right] {
                            layer.push(op(l.clone(), r.clone()));
                        }
                    }
                }
            }
            layer.sort_by_cached_key(|f| (f.bottom_count(), f.clone()));
            layer
        };
        self.ranked.extend(layer.iter().cloned());
        self.layers.push(layer);
        true
    }

    /// Makes ranks `0..=rank` available if they exist; returns how many
    /// images are available.
    pub(crate) fn ensure(&mut self, rank: usize) -> usize {
        while self.ranked.len() <= rank && self.grow() {}
        self.ranked.len()
    }

    /// True once every image up to the size bound is materialized.
    pub(crate) fn exhausted(&self) -> bool {
        self.layers.len() > self.max_size || self.leaves.is_empty()
    }

    pub(crate) fn get(&self, rank: usize) -> &Formula {
        &self.ranked[rank]
    }
}

/// Calls `visit` on every tuple of `k` ranks below `bound` with the given
/// sum, in lexicographic order, until it returns `Some`.
fn tuples_with_sum<T>(k: usize, sum: usize, bound: usize, visit: &mut impl FnMut(&[usize]) -> Option<T>) -> Option<T> {
    fn go<T>(
        tuple: &mut Vec<usize>,
        k: usize,
        remaining: usize,
        bound: usize,
        visit: &mut impl FnMut(&[usize]) -> Option<T>,
    ) -> Option<T> {
        if tuple.len() + 1 == k {
            if remaining >= bound {
                return None;
            }
            tuple.push(remaining);
            let out = visit(tuple);
            tuple.pop();
            return out;
        }
        for i in 0..bound.min(remaining + 1) {
            tuple.push(i);
            let out = go(tuple, k, remaining - i, bound, visit);
            tuple.pop();
            if out.is_some() {
                return out;
            }
        }
        None
    }
    if k == 0 {
        return if sum == 0 { visit(&[]) } else { None };
    }
    go(&mut Vec::with_capacity(k), k, sum, bound, visit)
}

/// Visits the identity substitution and then substitutions on `domain` in
/// canonical order, at most `cap` in total, until `visit` returns `Some`.
pub(crate) fn search_substitutions<T>(
    domain: &[Name],
    images: &mut ImageStream,
    cap: usize,
    mut visit: impl FnMut(&Substitution) -> Option<T>,
) -> Option<T> {
    if cap == 0 {
        return None;
    }
    if let Some(found) = visit(&Substitution::identity()) {
        return Some(found);
    }
    let k = domain.len();
    if k == 0 {
        return None;
    }
    let mut tried = 1;
    for sum in 0.. {
        let available = images.ensure(sum);
        if available == 0 || (images.exhausted() && sum > k * (available - 1)) {
            return None;
        }
        let mut out_of_budget = false;
        let found = tuples_with_sum(k, sum, available, &mut |t| {
            if tried >= cap {
                out_of_budget = true;
                return Some(None);
            }
            tried += 1;
            let sigma: Substitution = domain.iter().zip(t).map(|(v, &i)| (v.clone(), images.get(i).clone())).collect();
            visit(&sigma).map(Some)
        });
        match found {
            Some(Some(x)) => return Some(x),
            _ if out_of_budget => return None,
            _ => {}
        }
    }
    unreachable!("the loop returns once the images are exhausted")
}
