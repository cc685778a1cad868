use crate::formula::MRule;

/// A rule from the literature, admissible but not derivable in `Int`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownRule {
    pub name: &'static str,
    pub description: &'static str,
    pub rule: MRule,
    pub admissible_for_int: bool,
}

const RULES: &[(&str, &str, &str)] = &[
    ("harrop", "Harrop's rule", "~p->(q|r) / (~p->q)|(~p->r)"),
    ("kuznetsov", "Kuznetsov's rule", "(~~p->p)->(p|~p) / ((~~p->p)->~p)|((~~p->p)->~~p)"),
    ("mints", "Mints' rule", "(p->q)->(p|r) / ((p->q)->p)|((p->q)->r)"),
    ("dp", "disjunction property", "p|q / p, q"),
];

pub fn known_rules() -> Vec<KnownRule> {
    RULES
        .iter()
        .map(|&(name, description, text)| KnownRule {
            name,
            description,
            rule: text.parse().expect("known rules parse"),
            admissible_for_int: true,
        })
        .collect()
}

pub fn known_rule(name: &str) -> Option<KnownRule> {
    known_rules().into_iter().find(|r| r.name == name)
}
