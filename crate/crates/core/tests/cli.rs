use std::process::{Command, Output};

use serde_json::Value;

fn drg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drg")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Option<i32>, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = drg(&full);
    let value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (out.status.code(), value)
}

#[test]
fn analyze_extremal_array() {
    let (code, v) = json(&["analyze", "(3,2,2,2,1,1,1;1,1,1,1,1,1,3)"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["verdict"]["class"], "EXTREMAL");
    assert_eq!(v["verdict"]["ratio_fraction"], "94/101");
    assert_eq!(v["verdict"]["matched_extremal"], "Biggs-Smith Graph");
}

#[test]
fn analyze_violation_exits_two() {
    let (code, v) = json(&["analyze", "(3,2,2,1,1,1,1;1,1,1,1,1,1,3)"]);
    assert_eq!(code, Some(2));
    assert_eq!(v["verdict"]["class"], "VIOLATION");
    assert_eq!(v["verdict"]["ratio_decimal"], "1.049180");
}

#[test]
fn malformed_input_exits_one() {
    let out = drg(&["analyze", "(3,2;1)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    assert_eq!(drg(&["analyze", "(2,1;1,1)"]).status.code(), Some(1));
    assert_eq!(drg(&["verify", "no_such_family"]).status.code(), Some(1));
}

#[test]
fn catalog_recompute_is_clean() {
    let out = drg(&["catalog", "--recompute"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_petersen() {
    let (code, v) = json(&["verify", "petersen"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["array"], "(3,2;1,1)");
    assert_eq!(v["pass"], true);
}

#[test]
fn verify_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c6.txt");
    std::fs::write(&path, "# six-cycle\n6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n").unwrap();
    let (code, v) = json(&["verify", "--edges", path.to_str().unwrap(), "--all-pairs"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["array"], "(2,1,1;1,1,2)");

    let path = dir.path().join("p4.txt");
    std::fs::write(&path, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let out = drg(&["verify", "--edges", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = drg(&["analyze", "(3,2,1;1,2,3)", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["resistance"]["d"][2]["fraction"], "5/6");
}

#[test]
fn walk_matches_formula() {
    let out = drg(&["walk", "hypercube", "3", "--from-distance", "3", "--trials", "20000", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn scan_json_is_byte_identical_across_runs() {
    let args = ["scan", "--k", "3..4", "--diameter", "2..7", "--n-max", "200", "--format", "json"];
    let a = drg(&args);
    let b = drg(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn scan_only_biggs_lists_rejected_arrays() {
    let (code, v) = json(&["scan", "--k", "3", "--diameter", "7", "--n-max", "110", "--only-biggs"]);
    assert_eq!(code, Some(0));
    let listed: Vec<&str> = v["ruled_out_by_biggs"].as_array().unwrap().iter().filter_map(Value::as_str).collect();
    assert!(listed.contains(&"(3,2,2,1,1,1,1;1,1,1,1,1,1,3)"), "{listed:?}");
}
