//! End-to-end runs of the `branchlab` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_with_catalog(args, None)
}

fn run_with_catalog(args: &[&str], catalog: Option<&PathBuf>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_branchlab"));
    cmd.args(args).env_remove("BRANCHLAB_CATALOG");
    if let Some(path) = catalog {
        cmd.env("BRANCHLAB_CATALOG", path);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn list_small_catalog() {
    let o = run(&["list", "--max-n", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert!(rows.len() >= 20, "{} rows", rows.len());
    assert!(rows.iter().any(|r| r.starts_with("i:1 ")));
    assert!(rows.iter().any(|r| r.starts_with("i:2 ")));
}

#[test]
fn list_single_case() {
    let o = run(&["list", "--cases", "vi"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 2);
    assert!(out.contains("SO(16)/SO(15) ≃ Spin(9)/Spin(7)"));
}

#[test]
fn list_as_json() {
    let v = json(&run(&["list", "--format", "json"]));
    assert_eq!(v["schema"], 1);
    let cases = v["cases"].as_array().unwrap();
    assert!(cases.len() >= 20);
    let vi = cases.iter().find(|c| c["id"] == "vi").unwrap();
    assert_eq!(vi["g"], "Spin(9)");
    assert_eq!(vi["ranks"], serde_json::json!([1, 1, 2]));
}

#[test]
fn verify_everything_passes() {
    let o = run(&["verify", "--cases", "all", "--bound", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).trim_end().ends_with("0 failing"));
}

#[test]
fn verify_ix_reports_index_two_witness() {
    let o = run(&["verify", "--cases", "ix", "--bound", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let report = &v["reports"][0];
    assert_eq!(report["case"], "ix");
    let w = check(report, "dl-only-subalgebra-index-2");
    assert_eq!(w["failed"], 0);
    assert!(w["run"].as_u64().unwrap() > 0);
}

#[test]
fn verify_star_json_is_stable() {
    let args = ["verify", "--cases", "star", "--bound", "6", "--format", "json"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], true);
    let report = &v["reports"][0];
    assert_eq!(report["bound"], 6);
    for name in ["x-not-in-R", "r-plus-rx", "relations", "transfer", "independence"] {
        assert_eq!(check(report, name)["failed"], 0, "{name}");
    }
}

#[test]
fn verify_writes_to_out_file() {
    let path = tmp("verify_x.json");
    let o = run(&["verify", "--cases", "x", "--bound", "4", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["reports"][0]["case"], "x");
}

#[test]
fn unknown_case_is_a_usage_error() {
    assert_eq!(run(&["verify", "--cases", "xv"]).status.code(), Some(2));
    assert_eq!(run(&["list", "--cases", "vi:3"]).status.code(), Some(2));
    assert_eq!(run(&["list", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["list", "--max-n", "9"]).status.code(), Some(2));
}

#[test]
fn transfer_vi() {
    let o = run(&["transfer", "--cases", "vi", "--tau", "2", "--lambda", "11", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["image"], serde_json::json!(["11/2", "7/2", "5/2", "3/2"]));
    assert_eq!(v["canonical"], v["image"]);
}

#[test]
fn transfer_i_at_trivial_theta() {
    let o = run(&["transfer", "--cases", "i:2", "--tau", "0", "--lambda", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("image: (1, 0, -1)"));
}

#[test]
fn transfer_rejects_invalid_tau() {
    let o = run(&["transfer", "--cases", "vi", "--tau=-1", "--lambda", "11"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("outside Disc"));
    let o = run(&["transfer", "--cases", "vi", "--tau", "2", "--lambda", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_override_is_used() {
    let mut doc: Value = serde_json::from_str(branchlab::catalog::BUNDLED_CATALOG).unwrap();
    let x = doc["cases"].as_array().unwrap().iter().find(|c| c["id"] == "x").unwrap().clone();
    doc["cases"] = Value::Array(vec![x]);
    let path = tmp("catalog_x_only.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = run_with_catalog(&["list"], Some(&path));
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);

    let missing = tmp("no_such_catalog.json");
    assert_eq!(run_with_catalog(&["list"], Some(&missing)).status.code(), Some(2));
}

#[test]
fn corrupted_relation_fails_verification() {
    let mut doc: Value = serde_json::from_str(branchlab::catalog::BUNDLED_CATALOG).unwrap();
    let cases = doc["cases"].as_array_mut().unwrap();
    let vi = cases.iter_mut().find(|c| c["id"] == "vi").unwrap();
    vi["relations"][0]["terms"][0]["coeff"] = Value::String("12345".into());
    let path = tmp("catalog_bad_relation.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = run_with_catalog(&["verify", "--cases", "vi", "--bound", "3", "--format", "json"], Some(&path));
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["passed"], false);
    assert!(check(&v["reports"][0], "relations")["failed"].as_u64().unwrap() > 0);
}
