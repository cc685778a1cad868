use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{is_valid_name, parse_formula, Formula, Name, ParseError, VarSet};

/// A finite map from variables to formulas. Variables outside the domain are
/// left fixed.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Substitution(BTreeMap<Name, Formula>);

impl Substitution {
    pub fn identity() -> Substitution {
        Substitution(BTreeMap::new())
    }

    pub fn insert(&mut self, var: &str, image: Formula) -> Option<Formula> {
        self.0.insert(Name::from(var), image)
    }

    pub fn get(&self, var: &str) -> Option<&Formula> {
        self.0.get(var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Name, &Formula)> + '_ {
        self.0.iter()
    }

    pub fn domain(&self) -> VarSet {
        self.0.keys().cloned().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|(v, img)| img.as_var() == Some(&**v))
    }

    /// True iff every image is `⊥`-free.
    pub fn is_positive(&self) -> bool {
        self.0.values().all(Formula::is_positive)
    }

    /// Variables occurring in the images.
    pub fn image_vars(&self) -> VarSet {
        let mut out = VarSet::new();
        for img in self.0.values() {
            img.collect_vars(&mut out);
        }
        out
    }

    /// Homomorphic replacement of variables; `⊥` is fixed.
    pub fn apply(&self, f: &Formula) -> Formula {
        match f {
            Formula::Var(n) => self.0.get(n).cloned().unwrap_or_else(|| f.clone()),
            Formula::Bottom => Formula::Bottom,
            Formula::And(l, r) => Formula::and(self.apply(l), self.apply(r)),
            Formula::Or(l, r) => Formula::or(self.apply(l), self.apply(r)),
            Formula::Impl(l, r) => Formula::imp(self.apply(l), self.apply(r)),
        }
    }

    /// The substitution `then ∘ self`: applying the result equals applying
    /// `self` first and `then` second.
    pub fn compose(&self, then: &Substitution) -> Substitution {
        let mut out: BTreeMap<Name, Formula> = self.0.iter().map(|(v, img)| (v.clone(), then.apply(img))).collect();
        for (v, img) in &then.0 {
            out.entry(v.clone()).or_insert_with(|| img.clone());
        }
        Substitution(out)
    }

    /// Maps each image through `f`, keeping the domain.
    pub fn map_images(&self, mut f: impl FnMut(&Formula) -> Formula) -> Substitution {
        Substitution(self.0.iter().map(|(v, img)| (v.clone(), f(img))).collect())
    }
}

impl FromIterator<(Name, Formula)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (Name, Formula)>>(iter: I) -> Self {
        Substitution(iter.into_iter().collect())
    }
}

impl<'a> FromIterator<(&'a str, Formula)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (&'a str, Formula)>>(iter: I) -> Self {
        Substitution(iter.into_iter().map(|(v, f)| (Name::from(v), f)).collect())
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, img)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v} := {img}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Error)]
pub enum SubstitutionParseError {
    #[error("expected 'variable := formula', found '{0}'")]
    MissingAssignment(String),
    #[error("'{0}' is not a variable name")]
    BadVariable(String),
    #[error("variable {0} is assigned twice")]
    Duplicate(String),
    #[error("image of {var}: {source}")]
    Formula { var: String, source: ParseError },
}

impl FromStr for Substitution {
    type Err = SubstitutionParseError;

    /// The display syntax `{p := false, q := r->r}`; braces are optional
    /// and `=` may replace `:=`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim();
        let body = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')).unwrap_or(body);
        let mut out = BTreeMap::new();
        for part in body.split(',').filter(|p| !p.trim().is_empty()) {
            let (var, image) = part
                .split_once(":=")
                .or_else(|| part.split_once('='))
                .ok_or_else(|| SubstitutionParseError::MissingAssignment(part.trim().to_string()))?;
            let var = var.trim();
            if !is_valid_name(var) {
                return Err(SubstitutionParseError::BadVariable(var.to_string()));
            }
            let image = parse_formula(image)
                .map_err(|source| SubstitutionParseError::Formula { var: var.to_string(), source })?;
            if out.insert(Name::from(var), image).is_some() {
                return Err(SubstitutionParseError::Duplicate(var.to_string()));
            }
        }
        Ok(Substitution(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{arb_formula, arb_substitution};
    use proptest::prelude::*;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    #[test]
    fn parses_display_syntax() {
        let s: Substitution = "{p := false, q := r->r}".parse().unwrap();
        assert_eq!(s.to_string(), "{p := false, q := r->r}");
        assert_eq!("q=r->r,p=false".parse::<Substitution>().unwrap(), s);
        assert!("{}".parse::<Substitution>().unwrap().is_identity());
        assert!("p := q, p := r".parse::<Substitution>().is_err());
        assert!("p q".parse::<Substitution>().is_err());
        assert!("P := q".parse::<Substitution>().is_err());
        assert!("p := q|".parse::<Substitution>().is_err());
    }

    #[test]
    fn applies_homomorphically() {
        let s: Substitution = [("p", Formula::Bottom), ("q", f("q->q"))].into_iter().collect();
        assert_eq!(s.apply(&f("p|q")), Formula::or(Formula::Bottom, f("q->q")));
        assert_eq!(s.apply(&Formula::Bottom), Formula::Bottom);
        assert!(!s.is_positive());
    }

    #[test]
    fn identity_fixes_everything() {
        let g = f("(p->q)->~r|s&t");
        assert_eq!(Substitution::identity().apply(&g), g);
        let explicit: Substitution = [("p", f("p"))].into_iter().collect();
        assert!(explicit.is_identity());
    }

    proptest! {
        #[test]
        fn composition_law(s1 in arb_substitution(), s2 in arb_substitution(), g in arb_formula()) {
            prop_assert_eq!(s2.apply(&s1.apply(&g)), s1.compose(&s2).apply(&g));
        }

        #[test]
        fn positive_closure(s in arb_substitution(), g in arb_formula()) {
            if s.is_positive() && g.is_positive() {
                prop_assert!(s.apply(&g).is_positive());
            }
        }
    }
}
