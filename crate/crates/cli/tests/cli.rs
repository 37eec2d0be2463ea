use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn tetra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tetra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn rex_counts() {
    let out = tetra(&["rex", "A3", "--count-only", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["vertex_count"], 16);
    let out = tetra(&["rex", "C3", "--count-only", "--format", "json"]);
    assert_eq!(json(&out)["vertex_count"], 42);
    let out = tetra(&["rex", "b3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("type=B3 seed=123121323 vertices=42 edges=60\n"));
    assert_eq!(text.lines().count(), 43);
}

#[test]
fn rex_export_and_cap() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a3.tsv");
    let out = tetra(&["rex", "A3", "--count-only", "--export", path.to_str().unwrap()]);
    assert!(out.status.success());
    let edges = fs::read_to_string(&path).unwrap();
    assert_eq!(edges.lines().count(), 18);
    assert!(edges.lines().all(|l| l.split('\t').count() == 3));

    let out = Command::new(env!("CARGO_BIN_EXE_tetra"))
        .args(["rex", "F4", "--count-only"])
        .env("TETRA_MAX_VERTICES", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn derive_checks_fixtures() {
    for ty in ["A3", "C3", "B3", "F4", "H3"] {
        let out = tetra(&["derive", ty]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{ty}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(json(&out)["type"], ty);
    }
    let out = tetra(&["derive", "A3", "--format", "latex"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("R_{124}"), "{text}");
    assert!(tetra(&["derive", "F4", "--flip"]).status.success());
    assert!(tetra(&["derive", "H3", "--symmetric", "--format", "text"])
        .status
        .success());
    assert_eq!(tetra(&["derive", "A3", "--flip"]).status.code(), Some(2));
}

#[test]
fn derive_is_deterministic() {
    let a = tetra(&["derive", "F4"]).stdout;
    let b = tetra(&["derive", "F4"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn verify_targets() {
    let out = tetra(&["verify", "tetra", "--exhaustive", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["states_tested"], 1);

    let out = tetra(&["verify", "c3", "--exhaustive", "2"]);
    let report = json(&out);
    assert_eq!(report["states_tested"], 19683);
    assert_eq!(report["passed"], true);

    let a = tetra(&["verify", "b3", "--samples", "500", "--max", "6", "--seed", "3"]);
    let b = tetra(&["verify", "b3", "--samples", "500", "--max", "6", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["domain"]["seed"], 3);

    assert_eq!(tetra(&["verify", "f4", "--exhaustive", "4"]).status.code(), Some(3));
    assert_eq!(tetra(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(tetra(&["verify", "h3-sym"]).status.code(), Some(2));
}

#[test]
fn identity_candidate_fails_the_symmetric_h3_equation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("identity.json");
    fs::write(&path, r#"{"carrier": 2, "convention": "symmetric", "y": "identity"}"#).unwrap();
    let out = tetra(&[
        "verify",
        "h3-sym",
        "--exhaustive",
        "1",
        "--candidate",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], false);

    fs::write(&path, r#"{"carrier": 2, "convention": "inverses", "y": "identity"}"#).unwrap();
    let out = tetra(&[
        "verify",
        "h3",
        "--exhaustive",
        "1",
        "--candidate",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chains_columns() {
    let out = tetra(&["chains", "C", "211202341"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().last().unwrap().contains("(313106119)    (313106119)"));
    let out = tetra(&["chains", "B", "2,1,1,2,0,2,3,4,1", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["left"]["states"][7], serde_json::json!([3, 1, 4, 1, 0, 5, 1, 1, 7]));
    let out = tetra(&["chains", "C", "000000000"]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .skip(1)
        .step_by(2)
        .all(|l| l.contains("(000000000)")));
    assert_eq!(tetra(&["chains", "C", "12"]).status.code(), Some(2));
}

#[test]
fn decompose_and_negative_control() {
    let out = tetra(&["decompose", "--semantic-states", "100", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["c3_count"], 12);
    assert_eq!(report["b3_count"], 12);
    assert_eq!(report["semantic"]["seed"], 1);

    let mut script: Value = serde_json::from_str(tetra_core::fixtures::F4_PROOF).unwrap();
    let y = script["stages"][9]["y"].as_array_mut().unwrap();
    let start = 10;
    y.swap(start, start + 1);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corrupted.json");
    fs::write(&path, script.to_string()).unwrap();
    let out = tetra(&["decompose", "--fixture", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["passed"], false);
    assert_eq!(report["failure"]["stage"], 9);
}
