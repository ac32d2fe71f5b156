//! End-to-end tests that drive the compiled binary the way a user would:
//! generate catalog documents, feed them back through each subcommand, and
//! check exit codes, report JSON, and pinned witnesses.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfint"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary should launch")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("binary should not be killed by signal")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout should be a JSON report")
}

/// Generate a catalog document into `dir` and return its path.
fn catalog_file(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    let path_str = path.to_str().unwrap();
    let mut full = vec!["catalog"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path_str]);
    let out = run(&full);
    assert_eq!(exit_code(&out), 0, "catalog generation failed: {full:?}");
    assert!(path.is_file());
    path
}

fn check_status(report: &Value, name: &str) -> String {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check named {name}"))["status"]
        .as_str()
        .unwrap()
        .to_string()
}

fn witness(report: &Value, name: &str) -> Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check named {name}"))["witness"]
        .clone()
}

#[test]
fn verify_accepts_catalog_document() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(dir.path(), "h4", &["sweedler4"]);
    let out = run(&["verify", file.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["overall"], "pass");
    assert_eq!(report["command"], "verify");
    assert_eq!(report["dim"], 4);
    assert_eq!(report["field"], "Q");
}

#[test]
fn right_integral_witness_is_pinned_for_sweedler4() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(dir.path(), "h4", &["sweedler4"]);
    let out = run(&["integrals", file.to_str().unwrap(), "--side", "right"]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["overall"], "pass");
    // One-dimensional space spanned by the dual coordinate of x.
    let w = witness(&report, "integrals.right.dimension_is_one");
    assert_eq!(w["dimension"], 1);
    assert_eq!(w["basis"], serde_json::json!([["0", "0", "1", "0"]]));
}

#[test]
fn left_integral_differs_from_right_on_sweedler4() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(dir.path(), "h4", &["sweedler4"]);
    let out = run(&["integrals", file.to_str().unwrap(), "--side", "left"]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    let w = witness(&report, "integrals.left.dimension_is_one");
    assert_eq!(w["basis"], serde_json::json!([["0", "0", "0", "1"]]));
}

#[test]
fn gamma_witness_is_the_group_like_generator() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(dir.path(), "h4", &["sweedler4"]);
    let out = run(&["gamma", file.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["overall"], "pass");
    assert_eq!(check_status(&report, "grouplike.group_like"), "pass");
    let w = witness(&report, "grouplike.witness_independence");
    assert_eq!(w["gamma"], serde_json::json!(["0", "1", "0", "0"]));
}

#[test]
fn antipode_order_is_six_for_taft_dimension_nine() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(dir.path(), "t3", &["taft", "--n", "3", "--p", "7", "--q", "2"]);
    let out = run(&["antipode", file.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["overall"], "pass");
    assert_eq!(check_status(&report, "antipode.finite_order"), "pass");
    let w = witness(&report, "antipode.finite_order");
    assert_eq!(w["order"], 6);
}

#[test]
fn suite_passes_on_group_algebra() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(dir.path(), "kc2", &["group", "--order", "2", "--field", "q"]);
    let out = run(&["suite", file.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["overall"], "pass");
    assert_eq!(report["seed"], 7);
    assert!(report["checks"].as_array().unwrap().len() > 40);
}

#[test]
fn suite_output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(dir.path(), "kc2f5", &["group", "--order", "2", "--field", "fp", "--p", "5"]);
    let a = run(&["suite", file.to_str().unwrap()]);
    let b = run(&["suite", file.to_str().unwrap()]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn check_subcommand_covers_each_isomorphism_family() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(dir.path(), "kc2", &["group", "--order", "2", "--field", "q"]);
    for iso in ["doi", "free-hom", "sweedler", "structure", "adjunction", "snake", "currying"] {
        let out = run(&["check", file.to_str().unwrap(), "--iso", iso]);
        assert_eq!(exit_code(&out), 0, "check --iso {iso} failed");
        let report = stdout_json(&out);
        assert_eq!(report["overall"], "pass", "check --iso {iso} not passing");
    }
}

#[test]
fn corrupted_antipode_is_rejected_at_the_gate() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(dir.path(), "h4", &["sweedler4"]);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    // Break S(1) = 1 by sending the unit to the group-like generator.
    doc["antipode"][0][0] = Value::String("0".into());
    doc["antipode"][1][0] = Value::String("1".into());
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();

    for cmd in ["verify", "suite", "gamma"] {
        let out = run(&[cmd, bad.to_str().unwrap()]);
        assert_eq!(exit_code(&out), 2, "{cmd} should refuse a non-Hopf document");
    }
    let out = run(&["verify", bad.to_str().unwrap()]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("axiom gate"), "diagnostic should name the gate: {stderr}");
}

#[test]
fn malformed_json_exits_with_parse_failure() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("garbage.json");
    std::fs::write(&bad, "{ this is not json").unwrap();
    let out = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn unknown_document_keys_are_rejected() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(dir.path(), "h4", &["sweedler4"]);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    doc["extra_field"] = Value::Bool(true);
    let bad = dir.path().join("extra.json");
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn missing_file_exits_with_parse_failure() {
    let out = run(&["verify", "/nonexistent/nowhere.json"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn bad_catalog_parameters_are_rejected() {
    // A group must have at least one element.
    let out = run(&["catalog", "group", "--order", "0", "--field", "q"]);
    assert_eq!(exit_code(&out), 2);
    // Moduli must be prime.
    let out = run(&["catalog", "group", "--order", "2", "--field", "fp", "--p", "4"]);
    assert_eq!(exit_code(&out), 2);
    // Taft needs a primitive root of unity; q = 1 has order 1, not 3.
    let out = run(&["catalog", "taft", "--n", "3", "--p", "7", "--q", "1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_reports_every_axiom_individually() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(dir.path(), "kc3", &["group", "--order", "3", "--field", "q"]);
    let out = run(&["verify", file.to_str().unwrap()]);
    let report = stdout_json(&out);
    let names: Vec<String> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect();
    for expected in [
        "verify.associativity",
        "verify.unit_law",
        "verify.coassociativity",
        "verify.counit_law",
        "verify.bialgebra_compatibility",
        "verify.antipode_axiom",
    ] {
        assert!(names.iter().any(|n| n == expected), "missing record {expected}");
    }
}

#[test]
fn catalog_to_stdout_is_a_loadable_document() {
    let out = run(&["catalog", "dualgroup", "--order", "3", "--field", "q"]);
    assert_eq!(exit_code(&out), 0);
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("dual3.json");
    std::fs::write(&file, &out.stdout).unwrap();
    let verify = run(&["verify", file.to_str().unwrap()]);
    assert_eq!(exit_code(&verify), 0);
}
