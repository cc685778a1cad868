use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{parse_formula, Formula, ParseError, Substitution, VarSet};

/// A multiple-conclusion rule `Γ / Δ`. Either side may be empty; duplicates
/// are dropped, keeping first occurrences in order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MRule {
    premises: Vec<Formula>,
    conclusions: Vec<Formula>,
}

fn dedup(items: impl IntoIterator<Item = Formula>) -> Vec<Formula> {
    let mut out: Vec<Formula> = Vec::new();
    for f in items {
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

impl MRule {
    pub fn new(premises: impl IntoIterator<Item = Formula>, conclusions: impl IntoIterator<Item = Formula>) -> MRule {
        MRule { premises: dedup(premises), conclusions: dedup(conclusions) }
    }

    pub fn premises(&self) -> &[Formula] {
        &self.premises
    }

    pub fn conclusions(&self) -> &[Formula] {
        &self.conclusions
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> + '_ {
        self.premises.iter().chain(self.conclusions.iter())
    }

    pub fn free_vars(&self) -> VarSet {
        let mut out = VarSet::new();
        for f in self.formulas() {
            f.collect_vars(&mut out);
        }
        out
    }

    pub fn is_positive(&self) -> bool {
        self.formulas().all(Formula::is_positive)
    }

    pub fn substitute(&self, s: &Substitution) -> MRule {
        MRule::new(self.premises.iter().map(|f| s.apply(f)), self.conclusions.iter().map(|f| s.apply(f)))
    }

    pub fn to_doc(&self) -> RuleDoc {
        RuleDoc {
            premises: self.premises.iter().map(ToString::to_string).collect(),
            conclusions: self.conclusions.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_doc(doc: &RuleDoc) -> Result<MRule, ParseError> {
        let parse_all =
            |items: &[String]| -> Result<Vec<Formula>, ParseError> { items.iter().map(|s| parse_formula(s)).collect() };
        Ok(MRule::new(parse_all(&doc.premises)?, parse_all(&doc.conclusions)?))
    }
}

/// JSON form of a rule: `{"premises": [...], "conclusions": [...]}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RuleDoc {
    pub premises: Vec<String>,
    pub conclusions: Vec<String>,
}

#[derive(Debug, Error)]
pub enum RuleParseError {
    #[error("a rule needs exactly one '/' separating premises from conclusions")]
    MissingSlash,
    #[error("in rule formula {index} of the {side}: {source}")]
    Formula { side: &'static str, index: usize, source: ParseError },
}

impl FromStr for MRule {
    type Err = RuleParseError;

    /// Inline syntax: comma-separated premises, `/`, comma-separated
    /// conclusions, e.g. `p|q / p, q`. Either side may be blank.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lhs, rhs) = s.split_once('/').ok_or(RuleParseError::MissingSlash)?;
        if rhs.contains('/') {
            return Err(RuleParseError::MissingSlash);
        }
        let side = |text: &str, name: &'static str| -> Result<Vec<Formula>, RuleParseError> {
            if text.trim().is_empty() {
                return Ok(Vec::new());
            }
            text.split(',')
                .enumerate()
                .map(|(index, part)| {
                    parse_formula(part).map_err(|source| RuleParseError::Formula { side: name, index, source })
                })
                .collect()
        };
        Ok(MRule::new(side(lhs, "premises")?, side(rhs, "conclusions")?))
    }
}

impl fmt::Display for MRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |items: &[Formula]| items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        match (self.premises.is_empty(), self.conclusions.is_empty()) {
            (true, true) => f.write_str("/"),
            (true, false) => write!(f, "/ {}", join(&self.conclusions)),
            (false, true) => write!(f, "{} /", join(&self.premises)),
            (false, false) => write!(f, "{} / {}", join(&self.premises), join(&self.conclusions)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_syntax() {
        let r: MRule = "p|q / p, q".parse().unwrap();
        assert_eq!(r.premises().len(), 1);
        assert_eq!(r.conclusions().len(), 2);
        assert_eq!(r.to_string(), "p|q / p, q");
        let empty: MRule = "/".parse().unwrap();
        assert!(empty.premises().is_empty() && empty.conclusions().is_empty());
        assert_eq!(empty.to_string(), "/");
        let no_concl: MRule = "false /".parse().unwrap();
        assert_eq!(no_concl.premises(), &[Formula::Bottom]);
        assert!("p, q".parse::<MRule>().is_err());
        assert!("p / q / r".parse::<MRule>().is_err());
    }

    #[test]
    fn deduplicates_structurally() {
        let r = MRule::new(
            ["p".parse().unwrap(), "p".parse().unwrap()],
            ["q".parse().unwrap(), "r".parse().unwrap(), "q".parse().unwrap()],
        );
        assert_eq!(r.premises().len(), 1);
        assert_eq!(r.conclusions().len(), 2);
        let doc = r.to_doc();
        assert_eq!(MRule::from_doc(&doc).unwrap(), r);
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(json, r#"{"premises":["p"],"conclusions":["q","r"]}"#);
    }
}
