use std::process::Command;

use torus_cremona::links::{FormulaTable, LinearForm, LinkKind, Transform};
use torus_cremona::report::{cmd_prove_with, render, Format, ReportConfig};

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_torus-cremona"))
        .args(args)
        .output()
        .unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn every_lemma_passes() {
    for id in ["1.4.1", "1.8", "1.5-singular", "links-identities", "2.4.2"] {
        let (out, code) = run(&["verify", id]);
        assert_eq!(code, 0, "{id}: {out}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert!(v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["provenance"].is_string()));
    }
}

#[test]
fn orbit_report_lists_three_orbits() {
    let (out, _) = run(&["verify", "1.4.1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let orbits = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["name"].as_str().unwrap().starts_with("orbit "))
        .count();
    assert_eq!(orbits, 3);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "bogus-id"]).1, 2);
    assert_eq!(run(&["prove", "--format", "xml"]).1, 2);
    assert_eq!(run(&[]).1, 2);
}

#[test]
fn markdown_has_the_same_verdict() {
    let (md, code) = run(&["prove", "--format", "md", "--verbosity", "full-tree"]);
    assert_eq!(code, 0);
    assert!(md.contains("- verdict: unreachable (X → P2)"));
    assert!(md.contains("X d=3 {Q1,Q2,Q3} refuted (minus_two_curves)"));
    assert!(md.contains("PHI_8_2_INV coefficient cross-check"));
}

#[test]
fn reports_match_golden_files() {
    let (json, _) = run(&["prove", "--seed", "42", "--format", "json"]);
    assert_eq!(json, include_str!("../golden/prove_seed42.json"));
    let (md, _) = run(&["prove", "--seed", "42", "--format", "md"]);
    assert_eq!(md, include_str!("../golden/prove_seed42.md"));
}

#[test]
fn seed_changes_samples_only() {
    let (a, _) = run(&["prove", "--seed", "7"]);
    let (b, _) = run(&["prove", "--seed", "42"]);
    let (va, vb): (serde_json::Value, serde_json::Value) = (
        serde_json::from_str(&a).unwrap(),
        serde_json::from_str(&b).unwrap(),
    );
    assert_eq!(va["verdict"], vb["verdict"]);
    assert_eq!(va["contrast"]["status"], "reachable");
    assert_eq!(va["seed"], 7);
}

#[test]
fn corrupted_formula_fails_and_names_the_discrepancy() {
    let bad = Transform {
        a: LinearForm::ints(3, 0, -2),
        b: None,
        r: Some(LinearForm::ints(3, 0, -2)),
    };
    let table = FormulaTable::printed().with_override(LinkKind::Phi62, 2, bad);
    let r = cmd_prove_with(&ReportConfig::default(), &table).unwrap();
    assert_eq!(r.exit_code, 1);
    let failure = r.failure.unwrap();
    assert!(
        failure.contains("PHI_6_2") && failure.contains("lattice oracle"),
        "{failure}"
    );
    let json = render(
        &cmd_prove_with(&ReportConfig::default(), &table).unwrap(),
        Format::Json,
    )
    .unwrap();
    assert!(json.contains("\"status\": \"open\""));
}
