//! Propositional formulas over `∧`, `∨`, `→` and `⊥`.
//!
//! Negation is not a node kind: `~A` is sugar for `A -> false`. Formulas are
//! immutable trees with shared children, so cloning is cheap and values may
//! be handed across threads freely.

mod parse;
mod rule;
mod subst;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use parse::{parse_formula, ParseError, ParseErrorKind};
pub use rule::{MRule, RuleDoc, RuleParseError};
pub use subst::{Substitution, SubstitutionParseError};

/// A variable name. Names match `[a-z][a-zA-Z0-9_]*` and are never `false`.
pub type Name = Arc<str>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Formula {
    Var(Name),
    Bottom,
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Impl(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    /// Builds a variable node. The name is not validated here; use
    /// [`is_valid_name`] when the name comes from outside.
    pub fn var(name: &str) -> Formula {
        Formula::Var(Arc::from(name))
    }

    pub fn bottom() -> Formula {
        Formula::Bottom
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Arc::new(l), Arc::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Arc::new(l), Arc::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Formula {
        Formula::Impl(Arc::new(l), Arc::new(r))
    }

    /// `~a`, stored as `a -> false`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::imp(a, Formula::Bottom)
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, Formula::Bottom)
    }

    pub fn as_var(&self) -> Option<&str> {
        match self {
            Formula::Var(n) => Some(n),
            _ => None,
        }
    }

    /// The variables occurring in the formula, in canonical order.
    pub fn free_vars(&self) -> VarSet {
        let mut out = VarSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut VarSet) {
        match self {
            Formula::Var(n) => {
                out.0.insert(n.clone());
            }
            Formula::Bottom => {}
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// True iff `⊥` does not occur in the formula.
    pub fn is_positive(&self) -> bool {
        match self {
            Formula::Var(_) => true,
            Formula::Bottom => false,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(l, r) => l.is_positive() && r.is_positive(),
        }
    }

    /// Number of connective occurrences, counting `⊥` as a nullary connective.
    pub fn connectives(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::Bottom => 1,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(l, r) => 1 + l.connectives() + r.connectives(),
        }
    }

    /// Number of binary connectives.
    pub fn binary_size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bottom => 0,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(l, r) => 1 + l.binary_size() + r.binary_size(),
        }
    }

    pub fn bottom_count(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::Bottom => 1,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(l, r) => l.bottom_count() + r.bottom_count(),
        }
    }

    /// All distinct subformulas, including the formula itself.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if !out.insert(self.clone()) {
            return;
        }
        if let Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(l, r) = self {
            l.collect_subformulas(out);
            r.collect_subformulas(out);
        }
    }

    /// Replaces every `⊥` node with `with`.
    pub fn replace_bottom(&self, with: &Formula) -> Formula {
        match self {
            Formula::Var(_) => self.clone(),
            Formula::Bottom => with.clone(),
            Formula::And(l, r) => Formula::and(l.replace_bottom(with), r.replace_bottom(with)),
            Formula::Or(l, r) => Formula::or(l.replace_bottom(with), r.replace_bottom(with)),
            Formula::Impl(l, r) => Formula::imp(l.replace_bottom(with), r.replace_bottom(with)),
        }
    }

    /// Left-associated conjunction of `parts`; `None` when empty.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(parts: I) -> Option<Formula> {
        parts.into_iter().reduce(Formula::and)
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

impl serde::Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Formula {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_formula(&text).map_err(serde::de::Error::custom)
    }
}

/// Checks a name against `[a-z][a-zA-Z0-9_]*` and the reserved word `false`.
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    name != "false" && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A finite set of variable names iterated in lexicographic order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VarSet(BTreeSet<Name>);

impl VarSet {
    pub fn new() -> VarSet {
        VarSet(BTreeSet::new())
    }

    pub fn insert(&mut self, name: &str) -> bool {
        self.0.insert(Arc::from(name))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains(name)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Name> + '_ {
        self.0.iter()
    }

    pub fn extend_from(&mut self, other: &VarSet) {
        self.0.extend(other.0.iter().cloned());
    }

    pub fn union(&self, other: &VarSet) -> VarSet {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Smallest name `w0`, `w1`, … not in the set.
    pub fn fresh(&self) -> Name {
        (0..).map(|i| format!("w{i}")).find(|n| !self.contains(n)).map(Arc::from).expect("unbounded name supply")
    }

    /// The first `count` names of `p, q, r, …, z, p1, q1, …` that are not in
    /// the set.
    pub fn fresh_pool(&self, count: usize) -> Vec<Name> {
        const LETTERS: &[u8] = b"pqrstuvxyz";
        (0..)
            .flat_map(|round: usize| {
                LETTERS.iter().map(
                    move |&c| {
                        if round == 0 {
                            (c as char).to_string()
                        } else {
                            format!("{}{round}", c as char)
                        }
                    },
                )
            })
            .filter(|n| !self.contains(n))
            .take(count)
            .map(Arc::from)
            .collect()
    }
}

impl<'a> FromIterator<&'a str> for VarSet {
    fn from_iter<I: IntoIterator<Item = &'a str>>(iter: I) -> Self {
        VarSet(iter.into_iter().map(Arc::from).collect())
    }
}

impl FromIterator<Name> for VarSet {
    fn from_iter<I: IntoIterator<Item = Name>>(iter: I) -> Self {
        VarSet(iter.into_iter().collect())
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(n)?;
        }
        f.write_str("}")
    }
}

/// Every formula over `vars` with exactly `connectives` connective
/// occurrences (`⊥` counts as one), in a fixed deterministic order.
pub fn formulas_with_connectives(vars: &[&str], connectives: usize) -> Vec<Formula> {
    let mut layers: Vec<Vec<Formula>> = Vec::with_capacity(connectives + 1);
    for c in 0..=connectives {
        let mut layer = Vec::new();
        if c == 0 {
            layer.extend(vars.iter().map(|v| Formula::var(v)));
        }
        if c == 1 {
            layer.push(Formula::Bottom);
        }
        if c >= 1 {
            for build in [Formula::and, Formula::or, Formula::imp] {
                for left_size in 0..c {
                    let right_size = c - 1 - left_size;
                    for l in &layers[left_size] {
                        for r in &layers[right_size] {
                            layer.push(build(l.clone(), r.clone()));
                        }
                    }
                }
            }
        }
        layers.push(layer);
    }
    layers.pop().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    #[test]
    fn free_vars_examples() {
        assert_eq!(f("(p -> q) -> (p | r)").free_vars(), ["p", "q", "r"].into_iter().collect());
        assert!(Formula::Bottom.free_vars().is_empty());
        assert_eq!(f("p->p").free_vars(), ["p"].into_iter().collect());
    }

    #[test]
    fn positivity() {
        assert!(f("(p -> q) -> (p | r)").is_positive());
        assert!(!f("p -> false").is_positive());
        assert!(f("p & q").is_positive());
    }

    #[test]
    fn fresh_names() {
        let vs: VarSet = ["p", "w0", "w2"].into_iter().collect();
        assert_eq!(&*vs.fresh(), "w1");
        let pool = VarSet::new().fresh_pool(2);
        assert_eq!(pool.iter().map(|n| &**n).collect::<Vec<_>>(), ["p", "q"]);
        let vs: VarSet = ["p", "q"].into_iter().collect();
        assert_eq!(&*vs.fresh_pool(1)[0], "r");
    }

    #[test]
    fn name_alphabet() {
        assert!(is_valid_name("p"));
        assert!(is_valid_name("x_1B"));
        assert!(!is_valid_name("false"));
        assert!(!is_valid_name("P"));
        assert!(!is_valid_name("1p"));
        assert!(!is_valid_name(""));
    }

    #[test]
    fn connective_layers() {
        // a(0)=2, a(1)=13, a(2)=156 over {p,q} with ⊥ counted as a connective.
        let sizes: Vec<usize> = (0..=2).map(|c| formulas_with_connectives(&["p", "q"], c).len()).collect();
        assert_eq!(sizes, [2, 13, 156]);
        for c in 0..=2 {
            for g in formulas_with_connectives(&["p", "q"], c) {
                assert_eq!(g.connectives(), c);
            }
        }
    }
}
