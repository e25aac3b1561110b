//! Binary-level tests: flags, exit codes, and byte determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_picard-weights"))
        .args(args)
        .env_remove("PICARD_WEIGHTS_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn classify_golden_character() {
    let v = stdout_json(&[
        "classify",
        "--g",
        "2",
        "--r",
        "1",
        "--lambda",
        "1,0,-1;0,0,0|-1",
    ]);
    assert_eq!(v["verdict"], "InteriorMotiveDefined");
    assert_eq!(v["p"], 2);
    assert!(v["witness"].is_null());
}

#[test]
fn classify_obstructed_character() {
    let v = stdout_json(&[
        "classify",
        "--g",
        "2",
        "--r",
        "2",
        "--lambda",
        "1,1,0;1,1,0|-4",
    ]);
    assert_eq!(v["verdict"], "WeightObstruction");
    let witness = &v["witness"];
    assert_eq!(witness["weight"], 6);
    assert_eq!(witness["degree"], 2);
}

#[test]
fn profile_golden_table() {
    let v = stdout_json(&["profile", "--g", "2", "--lambda", "1,0,-1;0,0,0|-1"]);
    let degrees = v["degrees"].as_object().unwrap();
    assert_eq!(degrees.len(), 4);
    assert_eq!(degrees["1"][0]["weight"], 2);
    assert_eq!(degrees["5"][0]["weight"], 10);
    assert!(v["witnesses"]["1"].as_array().unwrap().len() == 2);
}

#[test]
fn enumerate_beyond_top_degree_is_empty_success() {
    let v = stdout_json(&["enumerate", "--g", "1", "--r", "1", "--p", "13"]);
    assert_eq!(v["constituents"].as_array().unwrap().len(), 0);
}

#[test]
fn kostant_single_degree() {
    let v = stdout_json(&["kostant", "--g", "1", "--lambda", "1,0,-1|-1", "--q", "3"]);
    assert_eq!(v["degrees"]["3"][0], "-3,0,3|-1");
}

#[test]
fn oracle_agrees_with_enumerate_on_support() {
    let oracle = stdout_json(&["oracle", "--g", "2", "--r", "1", "--p", "2"]);
    let enumerated = stdout_json(&["enumerate", "--g", "2", "--r", "1", "--p", "2"]);
    let support: Vec<&str> = oracle["constituents"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["character"].as_str().unwrap())
        .collect();
    let listed: Vec<&str> = enumerated["constituents"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["character"].as_str().unwrap())
        .collect();
    assert_eq!(support, listed);
}

#[test]
fn malformed_character_is_usage_error() {
    let out = run(&[
        "classify",
        "--g",
        "2",
        "--r",
        "1",
        "--lambda",
        "1,0;0,0,0|-1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
}

#[test]
fn non_dominant_profile_is_usage_error() {
    let out = run(&["profile", "--g", "1", "--lambda", "0,1,0|0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_budget_guard_exit_code() {
    let out = run(&[
        "oracle",
        "--g",
        "2",
        "--r",
        "2",
        "--p",
        "12",
        "--subset-budget",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_enumeration_passes() {
    let out = run(&["verify", "--suite", "enumeration"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_all_fails_only_on_range_confinement() {
    let out = run(&["verify", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failing: Vec<&str> = v["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| !c["passed"].as_bool().unwrap())
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["degeneration-range-confinement"]);
}

#[test]
fn verify_output_is_byte_deterministic() {
    let first = run(&["verify", "--suite", "identities", "--threads", "4"]);
    let second = run(&["verify", "--suite", "identities", "--threads", "1"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn degeneration_tsv_matrix_row() {
    let out = run(&[
        "degeneration",
        "--g",
        "1",
        "--r",
        "1",
        "--p",
        "1",
        "--format",
        "tsv",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p\tk=0\tk=1\tk=2\tk=3"));
    assert_eq!(lines.next(), Some("1\t0!\t1,2!\t4,5!\t6!"));
}

#[test]
fn degeneration_single_source() {
    let v = stdout_json(&[
        "degeneration",
        "--g",
        "2",
        "--r",
        "1",
        "--p",
        "2",
        "--k",
        "0",
        "--source",
        "closed",
    ]);
    let cells = v["rows"][0]["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 1);
    assert_eq!(cells[0]["closed_form"], serde_json::json!([0, 2]));
    assert!(cells[0].get("brute_force").is_none());
}

#[test]
fn degeneration_full_matrix() {
    let out = run(&["degeneration", "--g", "1", "--r", "1", "--format", "tsv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines().count(),
        8,
        "header plus one row per p:\n{text}"
    );
    assert!(text.lines().nth(1).unwrap().starts_with("0\t0\t1\t3\t4"));
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = run(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}
