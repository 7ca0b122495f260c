//! End-to-end tests of the `hyperocc` binary: exit codes, output schema,
//! and the hypergraph document format.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperocc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn json_results(out: &Output) -> serde_json::Value {
    let record: serde_json::Value = serde_json::from_str(&stdout(out)).expect("valid json");
    for key in ["command", "parameters", "results", "wall_ms", "version"] {
        assert!(record.get(key).is_some(), "run record missing {key}");
    }
    record["results"].clone()
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("hyperocc-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn construct_validate_count_pipeline() {
    let dir = tempdir();
    let path = dir.join("mod3_d5.json");
    let path_str = path.to_str().unwrap();

    let out = run(&["construct", "--family", "mod3", "--d", "5", "--out", path_str]);
    assert!(out.status.success(), "{}", stderr(&out));

    let out = run(&["validate", path_str]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("uniform r        3"), "{text}");
    assert!(text.contains("regular d        5"), "{text}");
    assert!(text.contains("linear           true"), "{text}");
    assert!(text.contains("cross-edge free  false"), "{text}");

    let out = run(&["count", path_str, "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "94");
}

#[test]
fn validate_rejects_malformed_document() {
    let dir = tempdir();
    let path = dir.join("bad.json");
    std::fs::write(&path, br#"{"n":2,"edges":[[0,0]]}"#).unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("repeats vertex"), "{}", stderr(&out));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = run(&["count", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_suggests() {
    let out = run(&["contruct", "--family", "mod3", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("construct"), "{}", stderr(&out));
}

#[test]
fn poly_emits_decimal_strings() {
    let dir = tempdir();
    let path = dir.join("cycle.json");
    std::fs::write(&path, br#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#).unwrap();
    let out = run(&["--json", "poly", path.to_str().unwrap(), "--k", "2"]);
    assert!(out.status.success());
    let results = json_results(&out);
    assert_eq!(results["coeffs"], serde_json::json!(["1", "4", "2"]));
    assert_eq!(results["total"], "7");
}

#[test]
fn occupancy_exact_rational_with_direct_verification() {
    let dir = tempdir();
    let path = dir.join("cycle2.json");
    std::fs::write(&path, br#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#).unwrap();
    let out = run(&[
        "--json",
        "occupancy",
        path.to_str().unwrap(),
        "--k",
        "2",
        "--lambda",
        "1/1",
        "--verify-direct",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let results = json_results(&out);
    assert_eq!(results["occupancy_exact"], "2/7");
    assert_eq!(results["direct_matches"], true);
}

#[test]
fn occupancy_bound_check() {
    let dir = tempdir();
    let path = dir.join("grid.json");
    let out = run(&["construct", "--family", "krrt", "--r", "3", "--d", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let out = run(&[
        "--json",
        "occupancy",
        path.to_str().unwrap(),
        "--k",
        "2",
        "--lambda",
        "0.5",
        "--check-bound",
        "strong",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let results = json_results(&out);
    assert_eq!(results["bound_satisfied"], true);
}

#[test]
fn weak_bound_schema() {
    let out = run(&["--json", "weak-bound", "--r", "3", "--d", "2", "--lambda", "0.5"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let results = json_results(&out);
    for key in ["alpha", "lp_value", "dual", "worst_slack"] {
        assert!(results.get(key).is_some(), "missing {key}");
    }
    assert!(results["dual"].get("Lambda_p").is_some());
    assert!(results["dual"].get("Lambda_c").is_some());
    let alpha = results["alpha"].as_f64().unwrap();
    let lp_value = results["lp_value"].as_f64().unwrap();
    assert!((0.5 * lp_value - alpha).abs() <= 1e-8);
}

#[test]
fn strong_bound_schema_and_dump_lp() {
    let dir = tempdir();
    let lp_path = dir.join("strong.csv");
    let out = run(&[
        "--json",
        "strong-bound",
        "--d",
        "3",
        "--lambda",
        "0.25",
        "--dump-lp",
        lp_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let results = json_results(&out);
    for key in ["alpha", "lp_value", "Lambda", "Lambdas", "c", "min_slack"] {
        assert!(results.get(key).is_some(), "missing {key}");
    }
    let csv = std::fs::read_to_string(&lp_path).unwrap();
    // objective row + r rows of constraints
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.lines().next().unwrap().ends_with("objective"));
}

#[test]
fn strong_bound_requires_explore_flag_off_r3() {
    let out = run(&["strong-bound", "--r", "4", "--d", "3", "--lambda", "0.5"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["strong-bound", "--r", "4", "--d", "3", "--lambda", "0.5", "--explore-r"]);
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn integrated_bounds_and_csv() {
    let out = run(&["bound", "--mode", "strong", "--d", "2,3", "--tol", "1e-8", "--csv", "-"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "d,bound,second_order,scaled_second_order");
    assert_eq!(lines.count(), 2);
}

#[test]
fn constants_match_reference_values() {
    let out = run(&["--json", "constants", "--cs3"]);
    assert!(out.status.success());
    let value = json_results(&out)["value"].as_f64().unwrap();
    assert!((value - 0.603772).abs() < 5e-6, "{value}");

    let out = run(&["--json", "constants", "--cw", "3"]);
    assert!(out.status.success());
    let value = json_results(&out)["value"].as_f64().unwrap();
    assert!((value - 0.2994581872).abs() < 1e-6, "{value}");
}

#[test]
fn gap_report() {
    let out = run(&["--json", "gap", "--family", "mod3", "--d", "5", "--k", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let results = json_results(&out);
    let construction = results["construction_value"].as_f64().unwrap();
    assert!((construction - 94f64.log2() / 15.0).abs() < 1e-12);
    assert_eq!(results["attains_conjecture"], true);
}

#[test]
fn certify_passes_on_proven_range() {
    let out = run(&["certify", "--d", "4", "--grid", "0.25,0.5,1.0"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("all certificates feasible"));

    let out = run(&["--threads", "4", "certify", "--d", "3"]);
    assert!(out.status.success());
}

#[test]
fn sample_is_deterministic_per_seed() {
    let dir = tempdir();
    let path = dir.join("cycle3.json");
    std::fs::write(&path, br#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#).unwrap();
    let args = [
        "sample",
        path.to_str().unwrap(),
        "--k",
        "2",
        "--lambda",
        "1.0",
        "--steps",
        "50000",
        "--seed",
        "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn run_record_replay_reproduces_results() {
    let out = run(&["--json", "count", "--k", "2"]);
    // missing file argument is a usage error
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));

    let dir = tempdir();
    let path = dir.join("replay.json");
    let built = run(&["construct", "--family", "hrd", "--r", "5", "--d", "7", "--out", path.to_str().unwrap()]);
    assert!(built.status.success());
    let args = ["--json", "count", path.to_str().unwrap(), "--k", "2"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(json_results(&first), json_results(&second));
    assert_eq!(json_results(&first)["count"], "636");
}
