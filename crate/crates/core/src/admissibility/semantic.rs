use crate::algebra::{EvalError, FiniteAlgebra, Validity};
use crate::formula::MRule;
use crate::prover::Countermodel;

/// Outcome of [`semantic_follows`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Following {
    pub follows: bool,
    /// The first family member validating the rules but refuting the rule
    /// in question, with its first refuting valuation.
    pub witness: Option<Countermodel>,
}

/// Whether every member of `family` validating all of `rules` validates `r`.
pub fn semantic_follows(family: &[FiniteAlgebra], rules: &[MRule], r: &MRule) -> Result<Following, EvalError> {
    for alg in family {
        if !alg.validates_rules(rules)? {
            continue;
        }
        if let Validity::Refuted(valuation) = alg.validates_rule(r)? {
            return Ok(Following { follows: false, witness: Some(Countermodel { algebra: alg.clone(), valuation }) });
        }
    }
    Ok(Following { follows: true, witness: None })
}

/// Per-rule result of [`independence_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dependence {
    pub rule: MRule,
    /// True when the rule follows from the others over the family.
    pub dependent: bool,
    pub witness: Option<Countermodel>,
}

/// For each rule, whether it follows from the remaining ones (removed by
/// position, so each copy of a duplicated rule depends on the other).
pub fn independence_check(family: &[FiniteAlgebra], rules: &[MRule]) -> Result<Vec<Dependence>, EvalError> {
    rules
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let rest: Vec<MRule> = rules.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect();
            let f = semantic_follows(family, &rest, r)?;
            Ok(Dependence { rule: r.clone(), dependent: f.follows, witness: f.witness })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissibility::known_rule;
    use crate::algebra::{bundled_catalog, enumerate_algebras, heyting_catalog};
    use crate::testing::arb_positive_formula;
    use proptest::prelude::*;

    fn rule(s: &str) -> MRule {
        s.parse().unwrap()
    }

    fn bool2() -> FiniteAlgebra {
        enumerate_algebras(2).pop().unwrap()
    }

    #[test]
    fn examples() {
        let cat = heyting_catalog(6);
        let r = rule("p|q / p, q");
        assert!(semantic_follows(&cat, std::slice::from_ref(&r), &r).unwrap().follows);
        assert!(semantic_follows(&[bool2()], &[], &r).unwrap().follows);
        // Mints' rule holds in every algebra of at most six elements; the
        // least refuting algebra has seven.
        let mints = known_rule("mints").unwrap().rule;
        assert!(semantic_follows(&cat, &[], &mints).unwrap().follows);
        let cat = heyting_catalog(7);
        let f = semantic_follows(&cat, &[], &mints).unwrap();
        assert!(!f.follows);
        let w = f.witness.unwrap();
        assert_eq!(w.algebra.size(), 7);
        let pos = cat.iter().position(|a| *a == w.algebra).unwrap();
        assert!(cat[..pos].iter().all(|a| a.validates_rule(&mints).unwrap().is_valid()));
        assert!(!w.algebra.validates_rule(&mints).unwrap().is_valid());
    }

    #[test]
    fn independence_examples() {
        let diamond = bundled_catalog().get("diamond").unwrap().clone();
        let family = [bool2(), diamond];
        let dp = rule("p|q / p, q");
        let report = independence_check(&family, std::slice::from_ref(&dp)).unwrap();
        assert!(!report[0].dependent);
        assert_eq!(report[0].witness.as_ref().unwrap().algebra.name(), "diamond");

        let report = independence_check(&family, &[dp.clone(), dp.clone()]).unwrap();
        assert!(report.iter().all(|d| d.dependent));

        // an instance of the disjunction rule is refuted exactly where it is
        let inst = rule("r|(r->s) / r, r->s");
        let report = independence_check(&family, &[dp, inst]).unwrap();
        assert!(report[1].dependent);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn heyting_and_brouwerian_families_agree(
            a in arb_positive_formula(&["p", "q"], 2),
            b in arb_positive_formula(&["p", "q"], 2),
            c in arb_positive_formula(&["p", "q"], 2),
        ) {
            let heyting = heyting_catalog(5);
            let reducts: Vec<FiniteAlgebra> = heyting.iter().map(FiniteAlgebra::brouwerian_reduct).collect();
            let rules = [MRule::new(vec![a], vec![b.clone()])];
            let r = MRule::new(vec![b], vec![c]);
            prop_assert_eq!(
                semantic_follows(&heyting, &rules, &r).unwrap().follows,
                semantic_follows(&reducts, &rules, &r).unwrap().follows
            );
        }
    }
}
