use std::process::{Command, Output};

use serde_json::Value;

fn brouwer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brouwer")).args(args).env_remove("BROUWER_CATALOG").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = brouwer(&all);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).unwrap())
}

const KC: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/varieties/kc.json");

#[test]
fn peirce_has_chain3_countermodel() {
    let (code, v) = json(&["prove", "((p->q)->p)->p"]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "NotProvable");
    assert_eq!(v["countermodel"]["algebra"], "chain3");
    assert_eq!(v["countermodel"]["valuation"]["p"], "m");
}

#[test]
fn prove_exit_codes() {
    assert_eq!(brouwer(&["prove", "p->p"]).status.code(), Some(0));
    assert_eq!(brouwer(&["prove-pos", "(p->q)|(q->p)"]).status.code(), Some(1));
    assert_eq!(brouwer(&["prove-pos", "~p"]).status.code(), Some(65));
    assert_eq!(brouwer(&["prove-ext", "(r->s)|(s->r)", "--axiom", "(p->q)|(q->p)"]).status.code(), Some(0));
    let o = brouwer(&["--max-size", "2", "prove-ext", "((p->q)->p)->p", "--variety", "lc"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn wajsberg_example() {
    let o = brouwer(&["reduce", "wajsberg", "false->p", "--pi", "p,q", "--fresh", "q"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(q->p&q)->(q->p)");
}

#[test]
fn kc_saturation_counterexample() {
    let (code, v) = json(&["saturation-check", KC, "--catalog", "fig1", "--max-gens", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["algebra"], "fig1");
    assert_eq!(v["generators"], serde_json::json!(["a", "b"]));
    let (code, v) = json(&["saturation-check", "lc", "--max-gens", "2"]);
    assert_eq!(code, 0);
    assert!(v["counterexample"].is_null());
}

#[test]
fn usage_and_data_errors() {
    assert_eq!(brouwer(&["no-such-command"]).status.code(), Some(64));
    assert_eq!(brouwer(&["prove"]).status.code(), Some(64));
    assert_eq!(brouwer(&["--help"]).status.code(), Some(0));
    let o = brouwer(&["prove", "p->"]);
    assert_eq!(o.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(brouwer(&["valid", "nonexistent", "p"]).status.code(), Some(65));
    assert_eq!(brouwer(&["eval", "chain3", "p", "--val", "p=zz"]).status.code(), Some(65));
}

#[test]
fn catalog_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cat.json");
    let o = brouwer(&["--json", "enumerate", "--max-size", "3"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut docs = v["algebras"].as_array().unwrap().clone();
    docs[2]["name"] = "three".into();
    std::fs::write(&path, serde_json::to_string(&docs).unwrap()).unwrap();
    let run = |with_env: bool| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_brouwer"));
        c.args(["valid", "three", "p|~p"]);
        if with_env {
            c.env("BROUWER_CATALOG", &path);
        } else {
            c.env_remove("BROUWER_CATALOG");
        }
        c.output().unwrap().status.code()
    };
    assert_eq!(run(true), Some(1));
    assert_eq!(run(false), Some(65));
    let mut bad = Command::new(env!("CARGO_BIN_EXE_brouwer"));
    bad.args(["valid", "chain3", "p"]).env("BROUWER_CATALOG", dir.path().join("missing.json"));
    assert_eq!(bad.output().unwrap().status.code(), Some(65));
}

#[test]
fn algebra_json_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let (_, v) = json(&["quotient", "fig1", "--gens", "a"]);
    let path = dir.path().join("q.json");
    std::fs::write(&path, v["algebra"].to_string()).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(brouwer(&["embed", p, "fig1"]).status.code(), Some(0));
    assert_eq!(brouwer(&["valid", p, "p|~p"]).status.code(), Some(1));
    assert_eq!(brouwer(&["member", p, "kc"]).status.code(), Some(0));
}

#[test]
fn admissibility_commands() {
    let (code, v) = json(&["falsify", "p|q / p"]);
    assert_eq!(code, 1);
    assert_eq!(v["falsifier"]["p"], "false");
    let (code, v) = json(&["falsify", "p|q / p", "--logic", "pos"]);
    assert_eq!(code, 1);
    assert_eq!(v["falsifier"]["p"], "r");
    assert_eq!(brouwer(&["--max-instances", "100", "falsify", "p|q / p, q"]).status.code(), Some(0));
    let (code, v) = json(&["unify", "p"]);
    assert_eq!(code, 0);
    assert_eq!(v["unifier"]["p"], "q->q");
    assert_eq!(brouwer(&["unify", "false"]).status.code(), Some(2));
    let (code, v) = json(&["transfer", "p|q / p", "{p := false, q := r->r}"]);
    assert_eq!(code, 0);
    assert_eq!(v["contradiction"], false);
    let o = brouwer(&["independent", "p|q / p, q", "~p->(q|r) / (~p->q)|(~p->r)", "--family", "bool2,diamond"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(brouwer(&["follows", "p / p|q", "--family", "catalog"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "enumerate", "--max-size", "6"];
    assert_eq!(stdout(&brouwer(&args)), stdout(&brouwer(&args)));
    let args = ["corpus", "--max-connectives", "2", "--random", "5", "--list"];
    assert_eq!(stdout(&brouwer(&args)), stdout(&brouwer(&args)));
}
