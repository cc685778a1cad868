//! Enumeration of finite Heyting algebras up to isomorphism.
//!
//! A finite distributive lattice is the lattice of down-sets of its poset of
//! join-irreducibles (equivalently, of up-sets of the dual poset), and every
//! finite distributive lattice is a Heyting algebra with `→` fixed by
//! residuation. So enumerating algebras of size `n` amounts to enumerating
//! posets, up to isomorphism, with exactly `n` down-sets.
//!
//! Posets are grown one maximal point at a time (every finite poset has a
//! natural labeling), which lets the search prune as soon as the down-set
//! count passes the bound: adding a point never removes a down-set.

use std::collections::BTreeSet;

use super::FiniteAlgebra;

/// A finite poset on points `0..k` in natural labeling: `below[j]` is the
/// bitmask of points strictly below `j`, all with smaller indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poset {
    below: Vec<u32>,
}

impl Poset {
    pub fn points(&self) -> usize {
        self.below.len()
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j] >> i & 1 == 1
    }

    pub fn is_chain(&self) -> bool {
        (0..self.points()).all(|i| (0..i).all(|j| self.less(j, i) || self.less(i, j)))
    }

    pub fn is_antichain(&self) -> bool {
        self.below.iter().all(|&b| b == 0)
    }

    /// Down-sets as bitmasks, sorted by cardinality then mask value. This is
    /// a linear extension of inclusion, so `∅` comes first and the full set
    /// last.
    pub fn down_sets(&self) -> Vec<u32> {
        let k = self.points();
        let mut out: Vec<u32> =
            (0..1u32 << k).filter(|&d| (0..k).all(|j| d >> j & 1 == 0 || self.below[j] & !d == 0)).collect();
        out.sort_by_key(|&d| (d.count_ones(), d));
        out
    }

    fn count_down_sets(&self) -> usize {
        let k = self.points();
        (0..1u32 << k).filter(|&d| (0..k).all(|j| d >> j & 1 == 0 || self.below[j] & !d == 0)).count()
    }

    /// Canonical code under relabeling: the least strict-order adjacency
    /// bitstring over all orderings that sort points by an isomorphism
    /// invariant.
    fn canonical_code(&self) -> Vec<u64> {
        let k = self.points();
        let above = |i: usize| (0..k).filter(|&j| self.less(i, j)).count();
        let inv: Vec<(usize, usize)> = (0..k).map(|i| (self.below[i].count_ones() as usize, above(i))).collect();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&i| inv[i]);
        // Blocks of equal invariant; permute within each block.
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &i in &order {
            match blocks.last_mut() {
                Some(b) if inv[b[0]] == inv[i] => b.push(i),
                _ => blocks.push(vec![i]),
            }
        }
        let mut best: Option<Vec<u64>> = None;
        let mut current: Vec<usize> = Vec::with_capacity(k);
        self.search_code(&blocks, 0, &mut vec![false; k], &mut current, &mut best);
        best.unwrap_or_default()
    }

    fn search_code(
        &self,
        blocks: &[Vec<usize>],
        block: usize,
        used: &mut Vec<bool>,
        current: &mut Vec<usize>,
        best: &mut Option<Vec<u64>>,
    ) {
        let Some(members) = blocks.get(block) else {
            let code: Vec<u64> = current
                .iter()
                .map(|&j| {
                    current.iter().enumerate().fold(0u64, |acc, (pos, &i)| acc | (u64::from(self.less(i, j)) << pos))
                })
                .collect();
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
            return;
        };
        let placed_in_block = members.iter().filter(|&&m| used[m]).count();
        if placed_in_block == members.len() {
            self.search_code(blocks, block + 1, used, current, best);
            return;
        }
        for &m in members {
            if used[m] {
                continue;
            }
            used[m] = true;
            current.push(m);
            self.search_code(blocks, block, used, current, best);
            current.pop();
            used[m] = false;
        }
    }

    /// The Heyting algebra of down-sets.
    pub fn to_algebra(&self, name: String) -> FiniteAlgebra {
        let downs = self.down_sets();
        let n = downs.len();
        let index = |d: u32| downs.iter().position(|&x| x == d).expect("closed under ∩ and ∪");
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        let mut imp = vec![0; n * n];
        for (a, &da) in downs.iter().enumerate() {
            for (b, &db) in downs.iter().enumerate() {
                meet[a * n + b] = index(da & db);
                join[a * n + b] = index(da | db);
                // largest down-set X with A ∩ X ⊆ B: the union of all such X
                let x = downs.iter().filter(|&&dx| da & dx & !db == 0).fold(0, |acc, &dx| acc | dx);
                imp[a * n + b] = index(x);
            }
        }
        let labels = element_labels(self, n);
        FiniteAlgebra::from_tables(name, n, meet, join, imp, n - 1, Some(0), labels)
            .expect("down-set lattices are Heyting algebras")
    }
}

fn element_labels(p: &Poset, n: usize) -> Vec<String> {
    if n == 1 {
        return vec!["1".into()];
    }
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == n - 1 => "1".to_string(),
            _ if n == 3 => "m".to_string(),
            i if p.is_chain() => format!("m{i}"),
            i => format!("e{i}"),
        })
        .collect()
}

/// Every poset (up to isomorphism) whose down-set lattice has at most
/// `max_size` elements.
fn posets_up_to(max_size: usize) -> Vec<Poset> {
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut frontier = vec![Poset { below: Vec::new() }];
    while let Some(p) = frontier.pop() {
        if p.count_down_sets() > max_size {
            continue;
        }
        let code = p.canonical_code();
        let mut tagged = code.clone();
        tagged.push(p.points() as u64);
        if !seen.insert(tagged) {
            continue;
        }
        // Children: a new maximal point whose strict down-set is any down-set.
        for d in p.down_sets() {
            let mut below = p.below.clone();
            below.push(d);
            frontier.push(Poset { below });
        }
        out.push((code, p));
    }
    out.sort_by(|(ca, pa), (cb, pb)| pa.points().cmp(&pb.points()).then(ca.cmp(cb)));
    out.into_iter().map(|(_, p)| p).collect()
}

/// All Heyting algebras with at most `max_size` elements, up to
/// isomorphism, ordered by size and then by a canonical code.
///
/// Names: `trivial` (one element), `bool2`, `chainN`, `boolN` for other
/// Boolean algebras, and `hN_i` otherwise (`i` counts within size `N`).
pub fn enumerate_algebras(max_size: usize) -> Vec<FiniteAlgebra> {
    let mut posets: Vec<(usize, Poset)> =
        posets_up_to(max_size).into_iter().map(|p| (p.count_down_sets(), p)).collect();
    posets.sort_by_key(|(n, _)| *n);
    let mut out = Vec::with_capacity(posets.len());
    let mut counter = 0;
    let mut last_size = 0;
    for (n, p) in posets {
        if n != last_size {
            counter = 0;
            last_size = n;
        }
        let name = match n {
            1 => "trivial".to_string(),
            2 => "bool2".to_string(),
            _ if p.is_chain() => format!("chain{n}"),
            _ if p.is_antichain() => format!("bool{n}"),
            _ => {
                counter += 1;
                format!("h{n}_{counter}")
            }
        };
        out.push(p.to_algebra(name));
    }
    out
}
