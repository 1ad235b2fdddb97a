//! End-to-end checks of the batch binary: exit codes, report formats,
//! and the script surface.

use std::path::Path;
use std::process::{Command, Output};

fn selab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selab")).args(args).output().expect("binary runs")
}

fn write(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

#[test]
fn no_arguments_is_a_usage_error() {
    let out = selab(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = selab(&["--suite", "everything"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn omega_suite_reports_the_witness_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("report.json");
    let out = selab(&["--suite", "omega", "--json", json_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("holds omega_witness"));
    assert!(stdout.contains("PASS omega-counterexample"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let records = json.as_array().unwrap();
    assert!(records.iter().any(|r| r["check"] == "omega_witness" && r["verdict"] == "holds"));
    for r in records {
        assert!(r.get("instance").is_some() && r.get("millis").is_some());
    }
}

#[test]
fn scripts_run_and_print_their_results() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("demo.selab");
    write(
        &script,
        "group G = symmetric(3)\nsub H = generate(G; (0 1))\ncore normal(H)\ncheck higgins(G)\n",
    );
    let out = selab(&[script.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("core normal(H) = [0]"));
    assert!(stdout.contains("holds higgins"));
}

#[test]
fn parse_errors_exit_with_code_two_and_a_position() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("broken.selab");
    write(&script, "group G = symmetric(3)\nsub H = generate(Q; 1)\n");
    let out = selab(&[script.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 2"), "{stderr}");
}

#[test]
fn custom_catalogs_feed_the_suite() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("catalog.txt");
    write(&manifest, "cyclic(4)\nsymmetric(3)\n");
    let out = selab(&[
        "--suite",
        "theorems",
        "--catalog",
        manifest.to_str().unwrap(),
        "--max-order",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("PASS group-axioms: 2 instances"));
}

#[test]
fn environment_variable_mirrors_max_order() {
    let out = Command::new(env!("CARGO_BIN_EXE_selab"))
        .args(["--suite", "cores"])
        .env("SELAB_MAX_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_selab"))
        .args(["--suite", "cores"])
        .env("SELAB_MAX_ORDER", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cores_without_verify_is_strict_skippable() {
    // capacity-style skips (the gated scans) abort under --strict
    let out = selab(&["--suite", "cores", "--max-order", "4", "--strict"]);
    assert_eq!(out.status.code(), Some(3));
    let out = selab(&["--suite", "cores", "--max-order", "4"]);
    assert_eq!(out.status.code(), Some(0));
}
