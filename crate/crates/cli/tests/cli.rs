//! End-to-end tests of the `wix` binary: output shapes and exit codes.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wix"))
        .args(args)
        .env_remove("WIX_CAP")
        .output()
        .expect("spawn wix")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a single JSON value")
}

fn stdout_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|line| serde_json::from_str(line).expect("each line is JSON"))
        .collect()
}

#[test]
fn min_builds_the_star() {
    let out = run(&["min", "--degrees", "3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["sigma"], 9);
    assert_eq!(v["tree"]["n"], 4);
    assert_eq!(v["tree"]["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn degrees_parse_with_commas_or_spaces_in_any_order() {
    let comma = run(&["min", "--degrees", "2,3,3"]);
    let spaces = run(&["min", "--degrees", "3", "3", "2"]);
    assert!(comma.status.success() && spaces.status.success());
    assert_eq!(stdout_json(&comma)["sigma"], 46);
    assert_eq!(stdout_json(&spaces)["sigma"], 46);
}

#[test]
fn max_builds_the_caterpillar() {
    let out = run(&["max", "--degrees", "3,3,2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["sigma"], 48);
    assert_eq!(v["tree"]["n"], 7);
}

#[test]
fn dot_output_carries_the_index_as_a_comment() {
    let out = run(&["min", "--degrees", "2,2", "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("// sigma = 10\n"));
    assert!(text.contains("graph {"));
    assert!(text.contains("0 -- 1;"));
}

#[test]
fn wiener_reports_both_algorithms() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"n":4,"edges":[[0,1],[1,2],[2,3]]}}"#).unwrap();
    let out = run(&["wiener", "--input", file.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["pairwise"], 10);
    assert_eq!(v["edges"], 10);
}

#[test]
fn wiener_rejects_a_missing_file() {
    let out = run(&["wiener", "--input", "/no/such/tree.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn wiener_rejects_a_disconnected_edge_list() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"n":4,"edges":[[0,1],[1,2],[0,2]]}}"#).unwrap();
    let out = run(&["wiener", "--input", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_small_sweep_holds() {
    let out = run(&["verify", "--max-n", "6", "--jobs", "2"]);
    assert!(out.status.success());
    let reports = stdout_lines(&out);
    assert_eq!(reports.len(), 12);
    for report in &reports {
        assert_eq!(report["greedy_matches_min"], true);
        assert_eq!(report["caterpillar_matches_max"], true);
    }
}

#[test]
fn verify_exits_two_on_the_known_maximizer_miss() {
    let out = run(&["verify", "--degrees", "4,3,3,2"]);
    assert_eq!(out.status.code(), Some(2));
    let reports = stdout_lines(&out);
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["greedy_matches_min"], true);
    assert_eq!(reports[0]["caterpillar_matches_max"], false);
    assert_eq!(reports[0]["max_value"], 124);
}

#[test]
fn verify_requires_exactly_one_target() {
    assert_eq!(run(&["verify"]).status.code(), Some(1));
    let both = run(&["verify", "--degrees", "3", "--max-n", "4"]);
    assert_eq!(both.status.code(), Some(1));
}

#[test]
fn enumerate_count_only_uses_the_closed_form() {
    let out = run(&["enumerate", "--degrees", "3,3", "--count-only"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["labeled"], 6);
}

#[test]
fn enumerate_counts_isomorphism_classes() {
    let out = run(&[
        "enumerate",
        "--degrees",
        "3,3",
        "--count-only",
        "--distinct",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["labeled"], 6);
    assert_eq!(v["distinct"], 1);
}

#[test]
fn enumerate_streams_every_labeled_tree() {
    let out = run(&["enumerate", "--degrees", "3,3"]);
    assert!(out.status.success());
    let trees = stdout_lines(&out);
    assert_eq!(trees.len(), 6);
    for tree in &trees {
        assert_eq!(tree["n"], 6);
        assert_eq!(tree["edges"].as_array().unwrap().len(), 5);
    }
}

#[test]
fn enumerate_distinct_streams_one_representative() {
    let out = run(&["enumerate", "--degrees", "3,3", "--distinct"]);
    assert!(out.status.success());
    assert_eq!(stdout_lines(&out).len(), 1);
}

#[test]
fn search_lands_between_the_extremes() {
    let out = run(&[
        "search",
        "--degrees",
        "3,3,2",
        "--direction",
        "min",
        "--seed",
        "7",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let start = v["start_sigma"].as_u64().unwrap();
    let end = v["end_sigma"].as_u64().unwrap();
    assert!(end <= start);
    assert!((46..=48).contains(&end));
    assert_eq!(v["degrees"], serde_json::json!([3, 3, 2]));
    assert_eq!(v["tree"]["n"], 7);
}

#[test]
fn search_is_deterministic_for_a_fixed_seed() {
    let args = [
        "search",
        "--degrees",
        "4,3,2,2",
        "--direction",
        "max",
        "--seed",
        "11",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn rejects_degrees_below_two() {
    let out = run(&["min", "--degrees", "1,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree"));
}

#[test]
fn cap_exceeded_exits_three() {
    let out = run(&["enumerate", "--degrees", "4,3,3,2", "--cap", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn cap_honors_the_environment_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_wix"))
        .args(["enumerate", "--degrees", "4,3,3,2"])
        .env("WIX_CAP", "10")
        .output()
        .expect("spawn wix");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["min"]).status.code(), Some(1));
    assert_eq!(run(&["min", "--degrees", "x"]).status.code(), Some(1));
}
