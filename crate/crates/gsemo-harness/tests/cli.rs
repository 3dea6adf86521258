//! End-to-end tests of the `gsemo` binary: result files, deterministic-
//! algorithm handling, and error exit codes.

use std::path::Path;
use std::process::{Command, Output};

use gsemo_harness::experiment::ResultRecord;

fn gsemo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsemo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.display().to_string()
}

const TRIANGLE: &str = "3 3\n0 1 1.0\n0 2 1.0\n1 2 1.0\n";
const COVERAGE: &str = "3 4\n2 0 1\n2 1 2\n1 3\n2.0 1.0 4.0 3.0\n";

#[test]
fn run_maxcut_writes_twenty_records_at_opt() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "tri.graph", TRIANGLE);
    let out = dir.path().join("r.json");
    let res = gsemo(&[
        "run", "--problem", "maxcut", "--input", &graph, "--algo", "gsemo",
        "--budget", "1000", "--seeds", "1..20", "--out", out.to_str().unwrap(),
    ]);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let record: ResultRecord =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(record.records.len(), 20);
    for rec in &record.records {
        assert_eq!(rec.best_value, 2.0);
        assert_eq!(rec.oracle_calls % 2, 1);
    }
    assert_eq!(record.aggregate.min_best_value, 2.0);
    let ratio = record.ratio_to_opt.expect("small instance gets a ratio");
    assert!((ratio - 1.0).abs() < 1e-12);
}

#[test]
fn run_greedy_is_seed_free_with_note() {
    let dir = tempfile::tempdir().unwrap();
    let cov = write(dir.path(), "cov.txt", COVERAGE);
    let out = dir.path().join("g.json");
    let res = gsemo(&[
        "run", "--problem", "coverage", "--input", &cov, "--algo", "greedy",
        "--k", "2", "--seeds", "1..20", "--out", out.to_str().unwrap(),
    ]);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let record: ResultRecord =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(record.records.len(), 1);
    assert_eq!(record.records[0].seed, None);
    assert!(record.note.as_deref().unwrap().contains("seeds ignored"));
    // Greedy picks v2 (items 1,2 = 5.0) then v3 (item 3 = 3.0).
    assert_eq!(record.records[0].best_value, 8.0);
    assert_eq!(record.records[0].best_subset, "011");
}

#[test]
fn malformed_graph_line_exits_2_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "bad.graph", "3 2\n0 1 1.0\n0 zebra 1.0\n");
    let res = gsemo(&[
        "run", "--problem", "maxcut", "--input", &graph, "--algo", "gsemo",
    ]);
    assert_eq!(res.status.code(), Some(2));
    let err = String::from_utf8_lossy(&res.stderr);
    assert!(err.contains(":3:"), "stderr: {err}");
}

#[test]
fn self_loop_exits_2_naming_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "loop.graph", "3 2\n0 1 1.0\n2 2 1.0\n");
    let res = gsemo(&[
        "opt", "--problem", "maxcut", "--input", &graph,
    ]);
    assert_eq!(res.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&res.stderr).contains(":3:"));
}

#[test]
fn zero_budget_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "tri.graph", TRIANGLE);
    let res = gsemo(&[
        "run", "--problem", "maxcut", "--input", &graph, "--algo", "gsemo",
        "--budget", "0",
    ]);
    assert_eq!(res.status.code(), Some(3));
}

#[test]
fn opt_prints_triangle_optimum() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "tri.graph", TRIANGLE);
    let res = gsemo(&["opt", "--problem", "maxcut", "--input", &graph]);
    assert!(res.status.success());
    let out = String::from_utf8_lossy(&res.stdout);
    assert!(out.contains("opt 2.0"), "stdout: {out}");
}

#[test]
fn diagnose_reports_coverage_as_monotone_submodular() {
    let dir = tempfile::tempdir().unwrap();
    let cov = write(dir.path(), "cov.txt", COVERAGE);
    let res = gsemo(&[
        "diagnose", "--problem", "coverage", "--input", &cov, "--k", "2",
    ]);
    assert!(res.status.success());
    let report: serde_json::Value =
        serde_json::from_slice(&res.stdout).expect("stdout is the JSON report");
    assert_eq!(report["monotone"]["holds"], true);
    assert_eq!(report["submodular"]["holds"], true);
    assert!((report["gammaMin"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert!(report["impliedBounds"]["additiveFactor"].as_f64().unwrap() > 0.74);
}

#[test]
fn diagnose_suppresses_bounds_for_non_monotone() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "tri.graph", TRIANGLE);
    let res = gsemo(&[
        "diagnose", "--problem", "maxcut", "--input", &graph, "--k", "2",
    ]);
    assert!(res.status.success());
    let report: serde_json::Value = serde_json::from_slice(&res.stdout).unwrap();
    assert_eq!(report["monotone"]["holds"], false);
    assert!(report.get("impliedBounds").is_none());
    assert!(report["note"].as_str().unwrap().contains("not monotone"));
}

#[test]
fn trace_csv_has_contract_header() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "tri.graph", TRIANGLE);
    let trace = dir.path().join("t.csv");
    let res = gsemo(&[
        "run", "--problem", "maxcut", "--input", &graph, "--algo", "gsemo",
        "--budget", "1000", "--seeds", "7", "--trace", trace.to_str().unwrap(),
    ]);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let body = std::fs::read_to_string(&trace).unwrap();
    assert!(body.starts_with("iteration,bestFeasibleValue,archiveOccupancy\n"));
    assert!(body.lines().count() > 1);
}

#[test]
fn guard_refusal_exits_3() {
    // A 30-vertex graph exceeds even the overridden enumeration guard.
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("30 29\n");
    for v in 1..30 {
        text.push_str(&format!("0 {v} 1.0\n"));
    }
    let graph = write(dir.path(), "big.graph", &text);
    let res = gsemo(&["opt", "--problem", "maxcut", "--input", &graph, "--guard-override"]);
    assert_eq!(res.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&res.stderr).contains("limit"));
}
