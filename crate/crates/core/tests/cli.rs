use std::process::{Command, Output};

use serde_json::Value;

fn unipotent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unipotent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = unipotent(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn block_json() {
    let v = json(&["block", "--n", "2", "--format", "json"]);
    assert_eq!(v["count"], 14);
    assert_eq!(v["d"], 4);
    let members = v["members"].as_array().unwrap();
    assert_eq!(members.len(), 14);
    assert!(members.iter().any(|m| m["label"] == "0:4.-"));
    assert!(members
        .iter()
        .all(|m| m["top"].is_array() && m["bottom"].is_array()));
}

#[test]
fn matrix_json_shape() {
    let v = json(&[
        "matrix", "--n", "3", "--regime", "generic", "--format", "json",
    ]);
    let order = v["order"].as_array().unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(order.len(), 27);
    assert_eq!(entries.len(), 27);
    assert!(entries.iter().all(|r| r.as_array().unwrap().len() == 27));
    let symbolic: Vec<_> = entries
        .iter()
        .flat_map(|r| r.as_array().unwrap())
        .filter_map(|x| x.as_str())
        .collect();
    assert_eq!(symbolic.len(), 2);
    assert!(symbolic.contains(&"γ") && symbolic.contains(&"β"));
}

#[test]
fn matrix_large_ell_has_only_integers() {
    let v = json(&[
        "matrix",
        "--n",
        "4",
        "--regime",
        "large-ell",
        "--format",
        "json",
    ]);
    let twos = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r.as_array().unwrap())
        .filter(|x| x.as_i64() == Some(2))
        .count();
    assert_eq!(twos, 2);
}

#[test]
fn matrix_csv_has_header_and_rows() {
    let out = unipotent(&[
        "matrix", "--n", "3", "--regime", "generic", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 28);
}

#[test]
fn dl_json_sums_to_the_ascii_output() {
    let v = json(&["dl", "--n", "3", "--element", "c", "--format", "json"]);
    let terms = v.as_array().unwrap();
    assert!(!terms.is_empty());
    let ascii = unipotent(&["dl", "--n", "3", "--element", "c", "--format", "ascii"]);
    let lines = String::from_utf8(ascii.stdout).unwrap().lines().count();
    assert_eq!(lines, terms.len());
    // Coefficients of the Coxeter torus are ±1.
    assert!(terms.iter().all(|t| {
        let c = t["coeff"].to_string();
        c == "1" || c == "-1" || c == "\"1\"" || c == "\"-1\""
    }));
}

#[test]
fn mn_prints_a_value() {
    let out = unipotent(&["mn", "--bp", "2.1", "--neg", "1", "--pos", "2"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "-1");
}

#[test]
fn mn_rank_mismatch_is_a_usage_error() {
    let out = unipotent(&["mn", "--bp", "2.1", "--pos", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn crystal_apply() {
    let out = unipotent(&[
        "crystal", "apply", "--d", "4", "--t", "0", "--op", "f", "--i", "-4", "--bp", "-.-",
    ]);
    assert!(out.status.success());
    let shown = String::from_utf8(out.stdout).unwrap();
    assert!(!shown.trim().is_empty());
}

#[test]
fn crystal_graph_dot() {
    let out = unipotent(&["crystal", "--d", "4", "--t", "0", "--max-rank", "3"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("digraph"));
}

#[test]
fn bad_bipartition_exits_two() {
    let out = unipotent(&[
        "crystal", "apply", "--d", "4", "--t", "0", "--op", "f", "--i", "0", "--bp", "1x.2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn missing_argument_exits_two() {
    assert_eq!(unipotent(&["block"]).status.code(), Some(2));
    assert_eq!(unipotent(&["matrix", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn family_lists_members() {
    let out = unipotent(&["family", "--n", "2", "--bp", "1.1,1,1"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("special"));
}

#[test]
fn verify_crystal_passes() {
    let out = unipotent(&["verify", "--suite", "crystal"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 2);
}

#[test]
fn verify_reports_the_zero_lemma_failure() {
    let out = unipotent(&["verify", "--suite", "matrix", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.starts_with("FAIL") && l.contains(" 9 ")));
    assert!(String::from_utf8(out.stderr).unwrap().contains("9"));
}
