//! Constructions on finite algebras: Brouwerian subreducts, adjoining a
//! zero, filters and their congruences, quotients, and B-embeddings.

use std::collections::BTreeSet;

use super::{AlgebraError, Elem, FiniteAlgebra};

/// A Brouwerian subalgebra of a parent's reduct, with the inclusion map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subreduct {
    pub algebra: FiniteAlgebra,
    /// `carrier[i]` is the parent element standing for element `i`.
    pub carrier: Vec<Elem>,
}

/// Closes `gens ∪ {1}` under meet, join and implication. The result never
/// carries a zero, even when the parent's zero lies in the carrier.
pub fn generate_subreduct(alg: &FiniteAlgebra, gens: &[Elem]) -> Subreduct {
    let mut inside = vec![false; alg.size()];
    inside[alg.unit()] = true;
    for &g in gens {
        inside[g] = true;
    }
    loop {
        let members: Vec<Elem> = alg.elements().filter(|&e| inside[e]).collect();
        let mut grew = false;
        for &a in &members {
            for &b in &members {
                for c in [alg.meet(a, b), alg.join(a, b), alg.imp(a, b)] {
                    if !inside[c] {
                        inside[c] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    let carrier: Vec<Elem> = alg.elements().filter(|&e| inside[e]).collect();
    let gen_labels: Vec<&str> = gens.iter().map(|&g| alg.label(g)).collect();
    let name = format!("{}<{}>", alg.name(), gen_labels.join(","));
    Subreduct { algebra: restrict(alg, &carrier, None, name), carrier }
}

/// The algebra on `carrier` (closed under the operations) with the parent's
/// tables restricted to it.
fn restrict(alg: &FiniteAlgebra, carrier: &[Elem], zero: Option<Elem>, name: String) -> FiniteAlgebra {
    let n = carrier.len();
    let mut pos = vec![usize::MAX; alg.size()];
    for (i, &e) in carrier.iter().enumerate() {
        pos[e] = i;
    }
    let table = |op: fn(&FiniteAlgebra, Elem, Elem) -> Elem| -> Vec<Elem> {
        let mut t = Vec::with_capacity(n * n);
        for &a in carrier {
            for &b in carrier {
                t.push(pos[op(alg, a, b)]);
            }
        }
        t
    };
    FiniteAlgebra::from_tables(
        name,
        n,
        table(FiniteAlgebra::meet),
        table(FiniteAlgebra::join),
        table(FiniteAlgebra::imp),
        pos[alg.unit()],
        zero.map(|z| pos[z]),
        carrier.iter().map(|&e| alg.label(e).to_string()).collect(),
    )
    .expect("a subset closed under the operations is a subalgebra")
}

/// Turns a Brouwerian algebra into a Heyting one. Without `force`, the least
/// element (which every finite lattice has) becomes the zero. With `force`,
/// a new bottom is appended at the last index with `a∧0 = 0`, `a∨0 = a`,
/// `0→a = 1` and `a→0 = 0` for `a ≠ 0`. Any zero already present is ignored.
pub fn adjoin_zero(alg: &FiniteAlgebra, force: bool) -> FiniteAlgebra {
    let name = format!("{}^0", alg.name());
    if !force {
        return alg.as_heyting().with_name(name);
    }
    let n = alg.size();
    let m = n + 1;
    let z = n;
    let (meet, join, imp) = alg.tables();
    let mut tm = vec![0; m * m];
    let mut tj = vec![0; m * m];
    let mut ti = vec![0; m * m];
    for a in 0..m {
        for b in 0..m {
            let k = a * m + b;
            if a < n && b < n {
                tm[k] = meet[a * n + b];
                tj[k] = join[a * n + b];
                ti[k] = imp[a * n + b];
            } else {
                tm[k] = z;
                tj[k] = if a == z { b } else { a };
                ti[k] = if a == z { alg.unit() } else { z };
            }
        }
    }
    let mut labels = alg.labels().to_vec();
    let mut zero_label = String::from("0");
    while labels.contains(&zero_label) {
        zero_label.push('\'');
    }
    labels.push(zero_label);
    FiniteAlgebra::from_tables(name, m, tm, tj, ti, alg.unit(), Some(z), labels)
        .expect("adjoining a bottom to a finite Brouwerian algebra yields a Heyting algebra")
}

/// A filter: contains the unit and is closed under detachment
/// (`a, a→b ∈ F ⇒ b ∈ F`), hence upward closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter {
    members: BTreeSet<Elem>,
}

impl Filter {
    /// Checks the filter conditions for `members` in `alg`.
    pub fn new(alg: &FiniteAlgebra, members: impl IntoIterator<Item = Elem>) -> Result<Filter, AlgebraError> {
        let members: BTreeSet<Elem> = members.into_iter().collect();
        if let Some(&e) = members.iter().find(|&&e| e >= alg.size()) {
            return Err(AlgebraError::NotAFilter { reason: format!("element {e} out of range") });
        }
        if !members.contains(&alg.unit()) {
            return Err(AlgebraError::NotAFilter { reason: "unit missing".into() });
        }
        for &a in &members {
            for b in alg.elements() {
                if members.contains(&alg.imp(a, b)) && !members.contains(&b) {
                    return Err(AlgebraError::NotAFilter {
                        reason: format!("{a} and {a}→{b} are members but {b} is not"),
                    });
                }
            }
        }
        Ok(Filter { members })
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(&e)
    }

    pub fn members(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Every filter of `alg`. Filters of a finite algebra are principal, so
    /// this is one filter per element (duplicates removed).
    pub fn all(alg: &FiniteAlgebra) -> Vec<Filter> {
        let set: BTreeSet<Filter> = alg.elements().map(|e| generated_filter(alg, &[e])).collect();
        set.into_iter().collect()
    }
}

/// The least filter containing `seed`, by fixpoint iteration of the filter
/// conditions.
pub fn generated_filter(alg: &FiniteAlgebra, seed: &[Elem]) -> Filter {
    let mut inside = vec![false; alg.size()];
    inside[alg.unit()] = true;
    for &s in seed {
        inside[s] = true;
    }
    loop {
        let mut grew = false;
        for a in alg.elements() {
            if !inside[a] {
                continue;
            }
            for b in alg.elements() {
                if !inside[b] && inside[alg.imp(a, b)] {
                    inside[b] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    Filter { members: alg.elements().filter(|&e| inside[e]).collect() }
}

/// `{a | φ(a) = 1}` for a map `φ` from `alg` into `target`.
pub fn kernel_filter(alg: &FiniteAlgebra, phi: &[Elem], target: &FiniteAlgebra) -> Filter {
    Filter { members: alg.elements().filter(|&a| phi[a] == target.unit()).collect() }
}

/// An equivalence relation on the carrier, stored as the least member of
/// each element's class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<Elem>,
}

impl Congruence {
    /// `θ(F)`: `a ~ b` iff `a→b, b→a ∈ F`.
    pub fn of_filter(alg: &FiniteAlgebra, f: &Filter) -> Congruence {
        let related = |a: Elem, b: Elem| f.contains(alg.imp(a, b)) && f.contains(alg.imp(b, a));
        let class_of = alg.elements().map(|a| alg.elements().find(|&b| related(a, b)).expect("a ~ a")).collect();
        Congruence { class_of }
    }

    /// From an arbitrary partition given by class labels; the result is
    /// normalized to least-member representatives.
    pub fn from_partition(labels: &[usize]) -> Congruence {
        let class_of =
            (0..labels.len()).map(|a| (0..labels.len()).find(|&b| labels[b] == labels[a]).expect("a ~ a")).collect();
        Congruence { class_of }
    }

    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn representative(&self, a: Elem) -> Elem {
        self.class_of[a]
    }

    /// True iff the relation is compatible with meet, join and implication.
    pub fn is_congruence_of(&self, alg: &FiniteAlgebra) -> bool {
        alg.elements().all(|a| {
            alg.elements().all(|b| {
                !self.related(a, b)
                    || alg.elements().all(|c| {
                        self.related(alg.meet(a, c), alg.meet(b, c))
                            && self.related(alg.join(a, c), alg.join(b, c))
                            && self.related(alg.imp(a, c), alg.imp(b, c))
                            && self.related(alg.imp(c, a), alg.imp(c, b))
                    })
            })
        })
    }

    /// `F_θ = {a | a θ 1}`.
    pub fn filter(&self, alg: &FiniteAlgebra) -> Filter {
        Filter { members: alg.elements().filter(|&a| self.related(a, alg.unit())).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: FiniteAlgebra,
    /// Element of `alg` ↦ its class in the quotient.
    pub projection: Vec<Elem>,
}

/// `A/F`: classes of `θ(F)` ordered by least member, with induced tables.
pub fn quotient_by_filter(alg: &FiniteAlgebra, f: &Filter) -> Quotient {
    let theta = Congruence::of_filter(alg, f);
    let reps: Vec<Elem> = alg.elements().filter(|&a| theta.representative(a) == a).collect();
    let mut index = vec![0; alg.size()];
    for (i, &r) in reps.iter().enumerate() {
        index[r] = i;
    }
    let projection: Vec<Elem> = alg.elements().map(|a| index[theta.representative(a)]).collect();
    let n = reps.len();
    let table = |op: fn(&FiniteAlgebra, Elem, Elem) -> Elem| -> Vec<Elem> {
        let mut t = Vec::with_capacity(n * n);
        for &a in &reps {
            for &b in &reps {
                t.push(projection[op(alg, a, b)]);
            }
        }
        t
    };
    let members: Vec<&str> = f.members().map(|e| alg.label(e)).collect();
    // Each class is an interval; it is named after its greatest element.
    let mut tops = reps.clone();
    for a in alg.elements() {
        let c = projection[a];
        tops[c] = alg.join(tops[c], a);
    }
    let class_labels = tops.iter().map(|&t| alg.label(t).to_string()).collect();
    let algebra = FiniteAlgebra::from_tables(
        format!("{}/[{}]", alg.name(), members.join(",")),
        n,
        table(FiniteAlgebra::meet),
        table(FiniteAlgebra::join),
        table(FiniteAlgebra::imp),
        projection[alg.unit()],
        alg.zero().map(|z| projection[z]),
        class_labels,
    )
    .expect("the quotient by a filter congruence is an algebra");
    Quotient { algebra, projection }
}

/// Searches for an injection of `b` into `a` preserving meet, join,
/// implication and unit (zeros are ignored on both sides). Returns the
/// lexicographically least such map.
pub fn find_b_embedding(b: &FiniteAlgebra, a: &FiniteAlgebra) -> Option<Vec<Elem>> {
    if b.size() > a.size() {
        return None;
    }
    let mut map = vec![usize::MAX; b.size()];
    let mut used = vec![false; a.size()];
    if extend_embedding(b, a, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Checks that `map` is an injective `{∧,∨,→,1}`-homomorphism from `b` to `a`.
pub fn is_b_embedding(b: &FiniteAlgebra, a: &FiniteAlgebra, map: &[Elem]) -> bool {
    if map.len() != b.size() || map.iter().any(|&m| m >= a.size()) {
        return false;
    }
    let distinct: BTreeSet<Elem> = map.iter().copied().collect();
    distinct.len() == map.len()
        && map[b.unit()] == a.unit()
        && b.elements().all(|x| {
            b.elements().all(|y| {
                map[b.meet(x, y)] == a.meet(map[x], map[y])
                    && map[b.join(x, y)] == a.join(map[x], map[y])
                    && map[b.imp(x, y)] == a.imp(map[x], map[y])
            })
        })
}

fn consistent(b: &FiniteAlgebra, a: &FiniteAlgebra, x: Elem, map: &[Elem]) -> bool {
    let mx = map[x];
    if (x == b.unit()) != (mx == a.unit()) {
        return false;
    }
    // Check every operation among assigned elements that involves x.
    for y in 0..b.size() {
        let my = map[y];
        if my == usize::MAX {
            continue;
        }
        let pairs = [
            (b.meet(x, y), a.meet(mx, my)),
            (b.join(x, y), a.join(mx, my)),
            (b.imp(x, y), a.imp(mx, my)),
            (b.imp(y, x), a.imp(my, mx)),
        ];
        for (inb, ina) in pairs {
            let img = map[inb];
            if img != usize::MAX && img != ina {
                return false;
            }
        }
    }
    // Results computed earlier may now land on x.
    for y in 0..b.size() {
        if map[y] == usize::MAX {
            continue;
        }
        for z in 0..b.size() {
            if map[z] == usize::MAX {
                continue;
            }
            let (my, mz) = (map[y], map[z]);
            if (b.meet(y, z) == x && a.meet(my, mz) != mx)
                || (b.join(y, z) == x && a.join(my, mz) != mx)
                || (b.imp(y, z) == x && a.imp(my, mz) != mx)
            {
                return false;
            }
        }
    }
    true
}

fn extend_embedding(
    b: &FiniteAlgebra,
    a: &FiniteAlgebra,
    next: Elem,
    map: &mut Vec<Elem>,
    used: &mut Vec<bool>,
) -> bool {
    if next == b.size() {
        return true;
    }
    for target in a.elements() {
        if used[target] {
            continue;
        }
        map[next] = target;
        used[target] = true;
        if consistent(b, a, next, map) && extend_embedding(b, a, next + 1, map, used) {
            return true;
        }
        used[target] = false;
        map[next] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bundled_catalog;

    fn chain(n: usize) -> FiniteAlgebra {
        let labels = match n {
            3 => vec!["0".into(), "m".into(), "1".into()],
            _ => (0..n).map(|i| i.to_string()).collect(),
        };
        FiniteAlgebra::from_order(format!("chain{n}"), labels, |a, b| a <= b, true).unwrap()
    }

    fn brouwerian_chain(n: usize) -> FiniteAlgebra {
        chain(n).brouwerian_reduct()
    }

    fn labels(alg: &FiniteAlgebra, elems: impl IntoIterator<Item = Elem>) -> Vec<String> {
        elems.into_iter().map(|e| alg.label(e).to_string()).collect()
    }

    #[test]
    fn fig1_subreduct() {
        let cat = bundled_catalog();
        let fig1 = cat.get("fig1").unwrap();
        let a = fig1.element_by_label("a").unwrap();
        let b = fig1.element_by_label("b").unwrap();
        let sub = generate_subreduct(fig1, &[a, b]);
        let mut carrier = labels(fig1, sub.carrier.iter().copied());
        carrier.sort();
        assert_eq!(carrier, ["1", "a", "b", "c", "d"]);
        assert!(sub.algebra.zero().is_none());
        // least element is the meet of the generators
        assert_eq!(sub.carrier[sub.algebra.least()], fig1.meet(a, b));
    }

    #[test]
    fn trivial_and_full_subreducts() {
        let c3 = chain(3);
        let one = generate_subreduct(&c3, &[c3.unit()]);
        assert_eq!(one.algebra.size(), 1);
        let all: Vec<Elem> = c3.elements().collect();
        let full = generate_subreduct(&c3, &all);
        assert_eq!(full.carrier, all);
        assert_eq!(full.algebra.brouwerian_reduct().zero(), None);
    }

    #[test]
    fn adjoining_zero() {
        let one = generate_subreduct(&chain(3), &[2]).algebra;
        let b2 = adjoin_zero(&one, true);
        assert_eq!(b2.size(), 2);
        assert_eq!(b2.zero(), Some(1));
        assert_eq!(b2.imp(0, 1), 1);
        assert_eq!(b2.imp(1, 0), 0);

        let three = adjoin_zero(&brouwerian_chain(2), true);
        assert_eq!(three.size(), 3);
        let z = three.zero().unwrap();
        assert_eq!(z, 2);
        for a in 0..2 {
            assert_eq!(three.meet(a, z), z);
            assert_eq!(three.join(a, z), a);
            assert_eq!(three.imp(z, a), three.unit());
            assert_eq!(three.imp(a, z), z);
        }
        assert_eq!(three.imp(z, z), three.unit());
        assert!(find_b_embedding(&three, &chain(3)).is_some());

        let fig1 = bundled_catalog().get("fig1").unwrap().clone();
        let sub = generate_subreduct(&fig1, &[1, 2]);
        let h = adjoin_zero(&sub.algebra, false);
        assert_eq!(h.size(), 5);
        assert_eq!(h.label(h.zero().unwrap()), "c");
    }

    #[test]
    fn generated_filters() {
        let c3 = chain(3);
        assert_eq!(generated_filter(&c3, &[]).members().collect::<Vec<_>>(), [2]);
        assert_eq!(generated_filter(&c3, &[1]).members().collect::<Vec<_>>(), [1, 2]);
        let fig1 = bundled_catalog().get("fig1").unwrap().clone();
        let d = fig1.element_by_label("d").unwrap();
        let sub = generate_subreduct(&fig1, &[1, 2]);
        let d_sub = sub.carrier.iter().position(|&e| e == d).unwrap();
        let f_sub = generated_filter(&sub.algebra, &[d_sub]);
        assert_eq!(labels(&sub.algebra, f_sub.members()), ["d", "1"]);
        let up = generated_filter(&fig1, &[d]);
        let back: Vec<Elem> = sub.carrier.iter().enumerate().filter(|(_, &e)| up.contains(e)).map(|(i, _)| i).collect();
        assert_eq!(back, f_sub.members().collect::<Vec<_>>());
    }

    #[test]
    fn filter_validation() {
        let c3 = chain(3);
        assert!(Filter::new(&c3, [1, 2]).is_ok());
        assert!(Filter::new(&c3, [1]).is_err());
        assert!(Filter::new(&c3, [0, 2]).is_err());
        assert_eq!(Filter::all(&c3).len(), 3);
    }

    #[test]
    fn quotients() {
        let c3 = chain(3);
        let q = quotient_by_filter(&c3, &generated_filter(&c3, &[1]));
        assert_eq!(q.algebra.size(), 2);
        assert_eq!(q.projection, [0, 1, 1]);
        assert_eq!(q.algebra.zero(), Some(0));
        let same = quotient_by_filter(&c3, &generated_filter(&c3, &[]));
        assert_eq!(same.algebra.size(), 3);
        assert!(find_b_embedding(&same.algebra, &c3).is_some());
        let whole = quotient_by_filter(&c3, &generated_filter(&c3, &[0]));
        assert_eq!(whole.algebra.size(), 1);
    }

    #[test]
    fn embeddings() {
        let cat = bundled_catalog();
        let fig1 = cat.get("fig1").unwrap();
        let sub = cat.get("fig1sub").unwrap();
        let emb = find_b_embedding(sub, fig1).unwrap();
        let mut image = labels(fig1, emb.iter().copied());
        image.sort();
        assert_eq!(image, ["1", "a", "b", "c", "d"]);

        let b2 = adjoin_zero(&generate_subreduct(&chain(3), &[2]).algebra, true);
        // Via {m,1}: the Boolean zero lands on m, and 1→0 = 0 maps to 1→m = m.
        assert!(is_b_embedding(&b2, &chain(3), &[2, 1]));
        // The lexicographically least witness uses {0,1} instead.
        assert_eq!(find_b_embedding(&b2, &chain(3)).unwrap(), [2, 0]);
        assert!(!is_b_embedding(&b2, &chain(3), &[1, 0]));

        let diamond = cat.get("diamond").unwrap();
        assert_eq!(find_b_embedding(diamond, &chain(3)), None);
        assert_eq!(find_b_embedding(diamond, &chain(4)), None);
    }
}
