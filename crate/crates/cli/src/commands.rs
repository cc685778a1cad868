//! One function per subcommand, each producing an [`Outcome`].

use std::fmt::Write as _;

use brouwer::admissibility::{
    check_transfer_instance, falsify_admissibility, find_unifier, independence_check, semantic_follows, LogicHandle,
};
use brouwer::algebra::{
    adjoin_zero, find_b_embedding, generate_subreduct, generated_filter, heyting_catalog, quotient_by_filter,
    AlgebraDoc, Validity,
};
use brouwer::corpus::{corpus, CorpusSpec};
use brouwer::prover::{
    is_int_theorem, is_positive_theorem, prove_ext, prove_int, prove_positive, Countermodel, SearchBudget,
};
use brouwer::reduction::{lift_substitution, reduce_by_pi, wajsberg_reduce, ReductionContext};
use brouwer::variety::{saturation_check, variety_membership};
use brouwer::{FiniteAlgebra, ProofResult, ProofStatus, Valuation, VarSet};
use serde_json::{json, Value};

use crate::args::{Cli, Command, FamilyArgs, LogicArgs, LogicChoice, ReduceMode};
use crate::inputs::{self, DataError, Result};

pub const POSITIVE: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const UNKNOWN: u8 = 2;

/// Exit code, human-readable report, and JSON payload of one command.
pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub payload: Value,
}

impl Outcome {
    fn new(code: u8, text: impl Into<String>, payload: Value) -> Outcome {
        Outcome { code, text: text.into(), payload }
    }
}

fn valuation_json(alg: &FiniteAlgebra, v: &Valuation) -> Value {
    Value::Object(v.iter().map(|(k, e)| (k.to_string(), json!(alg.label(e)))).collect())
}

fn countermodel_json(cm: &Countermodel) -> Value {
    json!({ "algebra": cm.algebra.name(), "valuation": valuation_json(&cm.algebra, &cm.valuation) })
}

fn labels(alg: &FiniteAlgebra, elems: impl IntoIterator<Item = usize>) -> Vec<String> {
    elems.into_iter().map(|e| alg.label(e).to_string()).collect()
}

fn status_code(s: ProofStatus) -> u8 {
    match s {
        ProofStatus::Provable => POSITIVE,
        ProofStatus::NotProvable => NEGATIVE,
        ProofStatus::Unknown => UNKNOWN,
    }
}

fn proof_outcome(f: &brouwer::Formula, r: &ProofResult) -> Outcome {
    let mut text = r.status.to_string();
    if let Some(cm) = &r.countermodel {
        write!(text, "\ncountermodel: {cm}").unwrap();
    } else if r.status == ProofStatus::NotProvable {
        text.push_str("\nno countermodel among the searched algebras");
    }
    let payload = json!({
        "formula": f.to_string(),
        "status": r.status,
        "countermodel": r.countermodel.as_ref().map(countermodel_json),
    });
    Outcome::new(status_code(r.status), text, payload)
}

fn budget(cli: &Cli) -> SearchBudget {
    SearchBudget {
        max_algebra_size: cli.max_size,
        max_formula_size: cli.max_formula,
        pool_size: cli.pool_size,
        max_instances: cli.max_instances,
    }
}

fn logic(args: &LogicArgs, budget: SearchBudget) -> Result<LogicHandle> {
    let handle = match args.logic {
        LogicChoice::Int => LogicHandle::int(),
        LogicChoice::Pos => LogicHandle::positive(),
        LogicChoice::Ext => LogicHandle::plus(inputs::axioms(&args.axioms.axioms, args.axioms.variety.as_deref())?)?,
    };
    Ok(handle.with_budget(budget))
}

fn family(args: &FamilyArgs, max_size: usize) -> Result<Vec<FiniteAlgebra>> {
    let fam = inputs::family(&args.family, max_size)?;
    Ok(if args.brouwerian { fam.iter().map(FiniteAlgebra::brouwerian_reduct).collect() } else { fam })
}

fn var_set(names: &[String]) -> Result<VarSet> {
    if let Some(bad) = names.iter().find(|n| !brouwer::formula::is_valid_name(n)) {
        return Err(DataError(format!("'{bad}' is not a variable name")));
    }
    Ok(names.iter().map(String::as_str).collect())
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let b = budget(cli);
    match &cli.command {
        Command::Prove { formula } => {
            let f = inputs::formula(formula)?;
            Ok(proof_outcome(&f, &prove_int(&f)))
        }
        Command::ProvePos { formula } => {
            let f = inputs::formula(formula)?;
            Ok(proof_outcome(&f, &prove_positive(&f)?))
        }
        Command::ProveExt { formula, axioms } => {
            let f = inputs::formula(formula)?;
            let ax = inputs::axioms(&axioms.axioms, axioms.variety.as_deref())?;
            Ok(proof_outcome(&f, &prove_ext(&ax, &f, &b)?))
        }
        Command::Reduce { mode } => reduce(mode),
        Command::Eval { algebra, formula, valuation } => {
            let alg = inputs::algebra(algebra)?;
            let f = inputs::formula(formula)?;
            let v = inputs::valuation(&alg, valuation)?;
            let e = alg.eval_formula(&v, &f)?;
            Ok(Outcome::new(POSITIVE, alg.label(e), json!({ "algebra": alg.name(), "value": alg.label(e) })))
        }
        Command::Valid { algebra, formula } => {
            let alg = inputs::algebra(algebra)?;
            let f = inputs::formula(formula)?;
            Ok(validity_outcome(&alg, alg.validates_formula(&f)?))
        }
        Command::CheckRule { algebra, rule } => {
            let alg = inputs::algebra(algebra)?;
            let r = inputs::rule(rule)?;
            Ok(validity_outcome(&alg, alg.validates_rule(&r)?))
        }
        Command::Subreduct { algebra, gens } => {
            let alg = inputs::algebra(algebra)?;
            let g = inputs::elements(&alg, gens)?;
            let sub = generate_subreduct(&alg, &g);
            let carrier = labels(&alg, sub.carrier.iter().copied());
            Ok(Outcome::new(
                POSITIVE,
                format!("carrier: {{{}}}", carrier.join(", ")),
                json!({ "carrier": carrier, "algebra": AlgebraDoc::from(&sub.algebra) }),
            ))
        }
        Command::AdjoinZero { algebra, force } => {
            let h = adjoin_zero(&inputs::algebra(algebra)?, *force);
            let zero = h.label(h.zero().expect("adjoin_zero yields a Heyting algebra")).to_string();
            Ok(Outcome::new(
                POSITIVE,
                format!("{}: zero = {zero}", h.name()),
                json!({ "zero": zero, "algebra": AlgebraDoc::from(&h) }),
            ))
        }
        Command::Filter { algebra, gens } => {
            let alg = inputs::algebra(algebra)?;
            let f = generated_filter(&alg, &inputs::elements(&alg, gens)?);
            let members = labels(&alg, f.members());
            Ok(Outcome::new(POSITIVE, format!("{{{}}}", members.join(", ")), json!({ "filter": members })))
        }
        Command::Quotient { algebra, gens } => {
            let alg = inputs::algebra(algebra)?;
            let f = generated_filter(&alg, &inputs::elements(&alg, gens)?);
            let q = quotient_by_filter(&alg, &f);
            let projection: Vec<String> = q.projection.iter().map(|&c| q.algebra.label(c).to_string()).collect();
            let mut text = format!("{} ({} elements)", q.algebra.name(), q.algebra.size());
            for (e, image) in alg.elements().zip(&projection) {
                write!(text, "\n{} -> {image}", alg.label(e)).unwrap();
            }
            Ok(Outcome::new(
                POSITIVE,
                text,
                json!({ "projection": projection, "algebra": AlgebraDoc::from(&q.algebra) }),
            ))
        }
        Command::Embed { source, target } => {
            let (src, tgt) = (inputs::algebra(source)?, inputs::algebra(target)?);
            Ok(match find_b_embedding(&src, &tgt) {
                Some(map) => {
                    let pairs: Vec<String> =
                        src.elements().map(|e| format!("{} -> {}", src.label(e), tgt.label(map[e]))).collect();
                    let mapping: serde_json::Map<String, Value> =
                        src.elements().map(|e| (src.label(e).to_string(), json!(tgt.label(map[e])))).collect();
                    Outcome::new(POSITIVE, pairs.join("\n"), json!({ "embedding": mapping }))
                }
                None => Outcome::new(
                    NEGATIVE,
                    format!("no B-embedding of {} into {}", src.name(), tgt.name()),
                    json!({ "embedding": null }),
                ),
            })
        }
        Command::Enumerate => {
            let algs = heyting_catalog(cli.max_size);
            let counts: Vec<usize> =
                (1..=cli.max_size).map(|n| algs.iter().filter(|a| a.size() == n).count()).collect();
            let mut text = String::new();
            for n in 1..=cli.max_size {
                let names: Vec<&str> = algs.iter().filter(|a| a.size() == n).map(|a| a.name()).collect();
                writeln!(text, "{n}: {} ({})", counts[n - 1], names.join(", ")).unwrap();
            }
            let docs: Vec<AlgebraDoc> = algs.iter().map(AlgebraDoc::from).collect();
            Ok(Outcome::new(POSITIVE, text.trim_end(), json!({ "counts": counts, "algebras": docs })))
        }
        Command::Member { algebra, variety } => {
            let alg = inputs::algebra(algebra)?;
            let spec = inputs::variety(variety)?;
            Ok(match variety_membership(&alg, &spec)?.failure {
                None => Outcome::new(
                    POSITIVE,
                    format!("{} is a member of {}", alg.name(), spec.name),
                    json!({ "member": true }),
                ),
                Some((axiom, v)) => {
                    let value = alg.label(alg.eval_formula(&v, &axiom)?).to_string();
                    Outcome::new(
                        NEGATIVE,
                        format!(
                            "{} is not a member of {}: axiom {axiom} takes value {value} at {}",
                            alg.name(),
                            spec.name,
                            v.display_in(&alg)
                        ),
                        json!({
                            "member": false,
                            "axiom": axiom.to_string(),
                            "valuation": valuation_json(&alg, &v),
                            "value": value,
                        }),
                    )
                }
            })
        }
        Command::SaturationCheck { variety, catalog, max_gens } => {
            let spec = inputs::variety(variety)?;
            let algs = inputs::family(catalog, cli.max_size)?;
            let report = saturation_check(&spec, &algs, *max_gens)?;
            Ok(match &report.counterexample {
                None => Outcome::new(
                    POSITIVE,
                    format!(
                        "no counterexample up to {} generators in {} member algebras ({} non-members skipped)",
                        max_gens,
                        report.checked.len(),
                        report.skipped.len()
                    ),
                    json!({ "counterexample": null, "checked": report.checked, "skipped": report.skipped }),
                ),
                Some(cx) => {
                    let gens = cx.generator_labels();
                    let carrier = labels(&cx.algebra, cx.subreduct.carrier.iter().copied());
                    let zero = cx.with_zero.label(cx.with_zero.zero().expect("zero adjoined")).to_string();
                    Outcome::new(
                        NEGATIVE,
                        format!(
                            "{}: generators ({}) give subreduct {{{}}}; with zero {zero} it refutes {} at {}",
                            cx.algebra.name(),
                            gens.join(","),
                            carrier.join(", "),
                            cx.axiom,
                            cx.valuation.display_in(&cx.with_zero)
                        ),
                        json!({
                            "algebra": cx.algebra.name(),
                            "generators": gens,
                            "carrier": carrier,
                            "zero": zero,
                            "axiom": cx.axiom.to_string(),
                            "valuation": valuation_json(&cx.with_zero, &cx.valuation),
                        }),
                    )
                }
            })
        }
        Command::Unify { formulas, logic: l } => {
            let gamma = inputs::formulas(formulas)?;
            let handle = logic(l, b)?;
            Ok(match find_unifier(&handle, &gamma, &b)? {
                Some(s) => Outcome::new(POSITIVE, s.to_string(), json!({ "unifier": s })),
                None => Outcome::new(UNKNOWN, "no unifier within budget", json!({ "unifier": null })),
            })
        }
        Command::Falsify { rule, logic: l } => {
            let r = inputs::rule(rule)?;
            let handle = logic(l, b)?;
            Ok(match falsify_admissibility(&handle, &r, &b)? {
                Some(s) => Outcome::new(
                    NEGATIVE,
                    format!("not admissible: {s} unifies every premise and no conclusion"),
                    json!({ "falsifier": s }),
                ),
                None => Outcome::new(
                    POSITIVE,
                    "no falsifier within budget (admissibility is not certified)",
                    json!({ "falsifier": null }),
                ),
            })
        }
        Command::Transfer { rule, substitution, axioms } => {
            let r = inputs::rule(rule)?;
            let s = inputs::substitution(substitution)?;
            let ax = inputs::axioms(&axioms.axioms, axioms.variety.as_deref())?;
            let report = check_transfer_instance(&ax, &r, &s, &b)?;
            let line = |l: &brouwer::admissibility::TransferLine| {
                json!({
                    "image": l.image.to_string(),
                    "lifted": l.lifted.to_string(),
                    "status": l.status_l,
                    "lifted_status": l.status_p,
                    "contradiction": l.contradicts(),
                })
            };
            let payload = json!({
                "pi": report.pi.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "lifted": report.lifted,
                "premises": report.premises.iter().map(line).collect::<Vec<_>>(),
                "conclusions": report.conclusions.iter().map(line).collect::<Vec<_>>(),
                "contradiction": report.has_contradiction(),
            });
            let code = if report.has_contradiction() { NEGATIVE } else { POSITIVE };
            Ok(Outcome::new(code, report.to_string(), payload))
        }
        Command::Follows { rule, rules, family: fam } => {
            let r = inputs::rule(rule)?;
            let from = inputs::rules(rules)?;
            let algs = family(fam, cli.max_size)?;
            let f = semantic_follows(&algs, &from, &r)?;
            Ok(match &f.witness {
                None => Outcome::new(POSITIVE, "follows", json!({ "follows": true, "witness": null })),
                Some(cm) => Outcome::new(
                    NEGATIVE,
                    format!("does not follow; witness {cm}"),
                    json!({ "follows": false, "witness": countermodel_json(cm) }),
                ),
            })
        }
        Command::Independent { rules, family: fam } => {
            let rs = inputs::rules(rules)?;
            let algs = family(fam, cli.max_size)?;
            let report = independence_check(&algs, &rs)?;
            let mut text = String::new();
            for d in &report {
                let verdict = if d.dependent { "dependent" } else { "independent" };
                write!(text, "{}: {verdict}", d.rule).unwrap();
                if let Some(cm) = &d.witness {
                    write!(text, " (witness {cm})").unwrap();
                }
                text.push('\n');
            }
            let entries: Vec<Value> = report
                .iter()
                .map(|d| {
                    json!({
                        "rule": d.rule.to_string(),
                        "dependent": d.dependent,
                        "witness": d.witness.as_ref().map(countermodel_json),
                    })
                })
                .collect();
            let code = if report.iter().any(|d| d.dependent) { NEGATIVE } else { POSITIVE };
            Ok(Outcome::new(code, text.trim_end(), json!({ "rules": entries })))
        }
        Command::Corpus { max_connectives, random, seed, list } => {
            let spec = CorpusSpec { max_connectives: *max_connectives, random: *random, seed: *seed };
            let formulas = corpus(&spec);
            if *list {
                let texts: Vec<String> = formulas.iter().map(|f| f.to_string()).collect();
                return Ok(Outcome::new(POSITIVE, texts.join("\n"), json!({ "formulas": texts })));
            }
            let mut provable = 0;
            let mut mismatches = Vec::new();
            for f in &formulas {
                let w = wajsberg_reduce(f, &ReductionContext::for_formula(f))?;
                let a = is_int_theorem(f);
                if a != is_positive_theorem(&w)? {
                    mismatches.push(f.to_string());
                }
                provable += usize::from(a);
            }
            let text =
                format!("{} formulas, {provable} provable, {} Wajsberg mismatches", formulas.len(), mismatches.len());
            let code = if mismatches.is_empty() { POSITIVE } else { NEGATIVE };
            Ok(Outcome::new(
                code,
                text,
                json!({ "formulas": formulas.len(), "provable": provable, "mismatches": mismatches }),
            ))
        }
    }
}

fn validity_outcome(alg: &FiniteAlgebra, v: Validity) -> Outcome {
    match v {
        Validity::Valid => Outcome::new(POSITIVE, "valid", json!({ "valid": true })),
        Validity::Refuted(val) => Outcome::new(
            NEGATIVE,
            format!("refuted at {}", val.display_in(alg)),
            json!({ "valid": false, "valuation": valuation_json(alg, &val) }),
        ),
    }
}

fn reduce(mode: &ReduceMode) -> Result<Outcome> {
    let (text, payload) = match mode {
        ReduceMode::Pi { formula, pi } => {
            let r = reduce_by_pi(&inputs::formula(formula)?, &var_set(pi)?)?;
            (r.to_string(), json!({ "result": r }))
        }
        ReduceMode::Wajsberg { formula, pi, fresh } => {
            let f = inputs::formula(formula)?;
            let ctx = if pi.is_empty() && fresh.is_none() {
                ReductionContext::for_formula(&f)
            } else {
                let mut set = var_set(pi)?;
                let vars = f.free_vars();
                let fresh = match fresh {
                    Some(p) => p.clone(),
                    None => set
                        .iter()
                        .find(|v| !vars.contains(v))
                        .map(|v| v.to_string())
                        .unwrap_or_else(|| set.union(&vars).fresh().to_string()),
                };
                set.insert(&fresh);
                ReductionContext::new(set, &fresh)?
            };
            let r = wajsberg_reduce(&f, &ctx)?;
            (r.to_string(), json!({ "result": r, "pi": ctx.pi().to_string(), "fresh": ctx.fresh() }))
        }
        ReduceMode::Lift { substitution, pi } => {
            let s = lift_substitution(&inputs::substitution(substitution)?, &var_set(pi)?)?;
            (s.to_string(), json!({ "result": s }))
        }
    };
    Ok(Outcome::new(POSITIVE, text, payload))
}
