//! Shared proptest strategies.

use proptest::prelude::*;

use crate::formula::{Formula, Substitution};

pub fn arb_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::Bottom),
        4 => "[a-z][a-z0-9_]{0,2}"
            .prop_filter("reserved", |s| s != "false")
            .prop_map(|s| Formula::var(&s)),
    ];
    leaf.prop_recursive(6, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
}

/// Formulas over a small alphabet, so that substitutions actually hit.
pub fn arb_small_formula(vars: &'static [&'static str], depth: u32) -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::Bottom),
        4 => prop::sample::select(vars).prop_map(Formula::var),
    ];
    leaf.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
    .boxed()
}

pub fn arb_positive_formula(vars: &'static [&'static str], depth: u32) -> BoxedStrategy<Formula> {
    let leaf = prop::sample::select(vars).prop_map(Formula::var);
    leaf.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
    .boxed()
}

pub fn arb_substitution() -> impl Strategy<Value = Substitution> {
    prop::collection::btree_map(
        prop::sample::select(&["p", "q", "r", "s"][..]),
        arb_small_formula(&["p", "q", "r", "s"], 3),
        0..4,
    )
    .prop_map(|m| m.into_iter().collect())
}
