//! Varieties of Heyting algebras given by axioms, membership of finite
//! algebras, and a bounded search for failures of B-saturation.
//!
//! A variety is B-saturated when adjoining a zero to any finitely generated
//! Brouwerian subalgebra of (the reduct of) a member yields a member again.
//! [`saturation_check`] looks for a violation among the subreducts of a
//! finite catalog generated by at most `max_gens` elements; finding none is
//! evidence up to that bound, not a proof.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{adjoin_zero, generate_subreduct, Elem, EvalError, FiniteAlgebra, Subreduct, Validity, Valuation};
use crate::formula::{Formula, ParseError};

#[derive(Debug, Error)]
pub enum VarietyError {
    #[error("cannot read variety spec {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("variety spec is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("axiom {index} of {name}: {source}")]
    Axiom { name: String, index: usize, source: ParseError },
    #[error("unknown bundled variety {0}")]
    Unknown(String),
}

/// On-disk form: `{"name": ..., "axioms": [formula strings]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyDoc {
    pub name: String,
    pub axioms: Vec<String>,
}

/// A variety of Heyting algebras presented by finitely many axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietySpec {
    pub name: String,
    pub axioms: Vec<Formula>,
}

const BUNDLED: &[(&str, &str)] = &[
    ("heyt", include_str!("../data/varieties/heyt.json")),
    ("kc", include_str!("../data/varieties/kc.json")),
    ("lc", include_str!("../data/varieties/lc.json")),
    ("bool", include_str!("../data/varieties/bool.json")),
];

impl VarietySpec {
    pub fn new(name: impl Into<String>, axioms: Vec<Formula>) -> VarietySpec {
        VarietySpec { name: name.into(), axioms }
    }

    pub fn from_doc(doc: &VarietyDoc) -> Result<VarietySpec, VarietyError> {
        let axioms = doc
            .axioms
            .iter()
            .enumerate()
            .map(|(index, a)| a.parse().map_err(|source| VarietyError::Axiom { name: doc.name.clone(), index, source }))
            .collect::<Result<_, _>>()?;
        Ok(VarietySpec { name: doc.name.clone(), axioms })
    }

    pub fn to_doc(&self) -> VarietyDoc {
        VarietyDoc { name: self.name.clone(), axioms: self.axioms.iter().map(|a| a.to_string()).collect() }
    }

    pub fn from_json(text: &str) -> Result<VarietySpec, VarietyError> {
        VarietySpec::from_doc(&serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<VarietySpec, VarietyError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| VarietyError::Io { path: path.display().to_string(), source })?;
        VarietySpec::from_json(&text)
    }

    /// A shipped spec by file stem: `heyt`, `kc`, `lc` (chains) or `bool`.
    pub fn bundled(name: &str) -> Result<VarietySpec, VarietyError> {
        let stem = name.strip_suffix(".json").unwrap_or(name);
        let (_, text) =
            BUNDLED.iter().find(|(n, _)| *n == stem).ok_or_else(|| VarietyError::Unknown(name.to_string()))?;
        VarietySpec::from_json(text)
    }

    pub fn bundled_names() -> impl Iterator<Item = &'static str> {
        BUNDLED.iter().map(|(n, _)| *n)
    }

    /// `Heyt_n`: algebras without `(n+2)`-element chain subalgebras, given
    /// by the bounded-depth axiom `bd_n`.
    pub fn heyt_n(n: usize) -> VarietySpec {
        VarietySpec::new(format!("Heyt_{n}"), vec![bounded_depth(n)])
    }

    pub fn is_positive(&self) -> bool {
        self.axioms.iter().all(Formula::is_positive)
    }
}

/// `bd_1 = p1 ∨ ¬p1`, `bd_{k+1} = p_{k+1} ∨ (p_{k+1} → bd_k)`.
pub fn bounded_depth(n: usize) -> Formula {
    assert!(n >= 1, "bounded depth starts at 1");
    let p = |i: usize| Formula::var(&format!("p{i}"));
    (2..=n).fold(Formula::or(p(1), Formula::not(p(1))), |bd, k| Formula::or(p(k), Formula::imp(p(k), bd)))
}

/// Result of [`variety_membership`]: the first failing axiom, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub failure: Option<(Formula, Valuation)>,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn variety_membership(alg: &FiniteAlgebra, spec: &VarietySpec) -> Result<Membership, EvalError> {
    for a in &spec.axioms {
        if let Validity::Refuted(v) = alg.validates_formula(a)? {
            return Ok(Membership { failure: Some((a.clone(), v)) });
        }
    }
    Ok(Membership { failure: None })
}

/// A member whose generated subreduct, with a zero adjoined, leaves the
/// variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationCounterexample {
    pub algebra: FiniteAlgebra,
    pub generators: Vec<Elem>,
    pub subreduct: Subreduct,
    pub with_zero: FiniteAlgebra,
    pub axiom: Formula,
    pub valuation: Valuation,
}

impl SaturationCounterexample {
    pub fn generator_labels(&self) -> Vec<&str> {
        self.generators.iter().map(|&g| self.algebra.label(g)).collect()
    }

    /// Re-checks both halves of the certificate from scratch.
    pub fn verify(&self, spec: &VarietySpec) -> Result<bool, EvalError> {
        let sub = generate_subreduct(&self.algebra, &self.generators);
        let with_zero = adjoin_zero(&sub.algebra, false);
        Ok(variety_membership(&self.algebra, spec)?.is_member() && !variety_membership(&with_zero, spec)?.is_member())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationReport {
    pub counterexample: Option<SaturationCounterexample>,
    /// Catalog algebras searched (members of the variety).
    pub checked: Vec<String>,
    /// Catalog algebras skipped because they are not members.
    pub skipped: Vec<String>,
    pub max_gens: usize,
}

/// Strictly increasing `k`-tuples over `0..n`, lexicographically.
fn combinations(n: usize, k: usize) -> Vec<Vec<Elem>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Searches catalog members, in order, and their generator sets of size
/// `1..=max_gens` (size first, then lexicographically) for a subreduct
/// whose zero-extension is not a member.
pub fn saturation_check(
    spec: &VarietySpec,
    catalog: &[FiniteAlgebra],
    max_gens: usize,
) -> Result<SaturationReport, EvalError> {
    let mut report = SaturationReport { counterexample: None, checked: Vec::new(), skipped: Vec::new(), max_gens };
    for alg in catalog {
        let alg = alg.as_heyting();
        if !variety_membership(&alg, spec)?.is_member() {
            report.skipped.push(alg.name().to_string());
            continue;
        }
        report.checked.push(alg.name().to_string());
        for k in 1..=max_gens.min(alg.size()) {
            for gens in combinations(alg.size(), k) {
                let sub = generate_subreduct(&alg, &gens);
                let with_zero = adjoin_zero(&sub.algebra, false);
                if let Some((axiom, valuation)) = variety_membership(&with_zero, spec)?.failure {
                    let cx = SaturationCounterexample {
                        algebra: alg.clone(),
                        generators: gens,
                        subreduct: sub,
                        with_zero,
                        axiom,
                        valuation,
                    };
                    debug_assert!(cx.verify(spec)?);
                    report.counterexample = Some(cx);
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bundled_catalog, heyting_catalog};

    #[test]
    fn bundled_specs() {
        let names: Vec<_> = VarietySpec::bundled_names().collect();
        assert_eq!(names, ["heyt", "kc", "lc", "bool"]);
        assert!(VarietySpec::bundled("heyt").unwrap().axioms.is_empty());
        assert_eq!(VarietySpec::bundled("kc.json").unwrap().axioms[0].to_string(), "~x|~~x");
        assert_eq!(VarietySpec::bundled("lc").unwrap().name, "Ch");
        assert!(VarietySpec::bundled("lc").unwrap().is_positive());
        assert!(VarietySpec::bundled("nope").is_err());
        let kc = VarietySpec::bundled("kc").unwrap();
        assert_eq!(VarietySpec::from_doc(&kc.to_doc()).unwrap(), kc);
        assert!(matches!(
            VarietySpec::from_json(r#"{"name":"x","axioms":["p|"]}"#),
            Err(VarietyError::Axiom { index: 0, .. })
        ));
    }

    #[test]
    fn bounded_depth_axioms() {
        assert_eq!(bounded_depth(1).to_string(), "p1|~p1");
        assert_eq!(bounded_depth(2).to_string(), "p2|(p2->p1|~p1)");
        let cat = heyting_catalog(6);
        for n in 1..=3 {
            let spec = VarietySpec::heyt_n(n);
            for alg in &cat {
                // Heyt_n: the poset of join-irreducibles has height at most n
                assert_eq!(
                    variety_membership(alg, &spec).unwrap().is_member(),
                    join_irreducible_height(alg) <= n,
                    "{} in Heyt_{n}",
                    alg.name()
                );
            }
        }
    }

    /// Number of elements in the longest chain of join-irreducibles.
    fn join_irreducible_height(alg: &FiniteAlgebra) -> usize {
        let bottom = alg.least();
        let irreducible: Vec<Elem> = alg
            .elements()
            .filter(|&j| {
                j != bottom && alg.elements().all(|x| alg.elements().all(|y| alg.join(x, y) != j || x == j || y == j))
            })
            .collect();
        let mut order = irreducible.clone();
        order.sort_by_key(|&a| alg.elements().filter(|&b| alg.leq(b, a)).count());
        let mut best = std::collections::BTreeMap::new();
        for &a in &order {
            let below = irreducible.iter().filter(|&&b| b != a && alg.leq(b, a)).map(|b| best[b]).max().unwrap_or(0);
            best.insert(a, below + 1);
        }
        best.values().copied().max().unwrap_or(0)
    }

    #[test]
    fn kc_membership() {
        let cat = bundled_catalog();
        let kc = VarietySpec::bundled("kc").unwrap();
        let fig1 = cat.get("fig1").unwrap();
        assert!(variety_membership(fig1, &kc).unwrap().is_member());
        let sub = cat.get("fig1sub").unwrap();
        let (axiom, v) = variety_membership(sub, &kc).unwrap().failure.unwrap();
        assert_eq!(axiom.to_string(), "~x|~~x");
        assert_eq!(v.display_in(sub).to_string(), "x=a");
        assert_eq!(sub.label(sub.eval_formula(&v, &axiom).unwrap()), "d");
        let heyt = VarietySpec::bundled("heyt").unwrap();
        assert!(cat.iter().all(|a| variety_membership(a, &heyt).unwrap().is_member()));
    }

    #[test]
    fn saturation_examples() {
        let cat = bundled_catalog();
        let kc = VarietySpec::bundled("kc").unwrap();
        let fig1 = cat.get("fig1").unwrap().clone();
        let report = saturation_check(&kc, &[fig1], 2).unwrap();
        let cx = report.counterexample.unwrap();
        assert_eq!(cx.algebra.name(), "fig1");
        assert_eq!(cx.generator_labels(), ["a", "b"]);
        assert!(cx.verify(&kc).unwrap());

        let all = heyting_catalog(6);
        for name in ["heyt", "lc", "bool"] {
            let spec = VarietySpec::bundled(name).unwrap();
            let report = saturation_check(&spec, &all, 2).unwrap();
            assert_eq!(report.counterexample, None, "{name}");
        }
        let bool8: Vec<_> = heyting_catalog(8).into_iter().filter(|a| a.name().starts_with("bool")).collect();
        let report = saturation_check(&VarietySpec::heyt_n(1), &bool8, 3).unwrap();
        assert_eq!((report.counterexample, report.checked.len()), (None, 3));
        // non-members are skipped rather than searched
        let report = saturation_check(&VarietySpec::bundled("bool").unwrap(), &all, 2).unwrap();
        assert_eq!(report.checked, ["trivial", "bool2", "bool4"]);
    }
}
