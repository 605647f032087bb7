//! End-to-end CLI checks: subcommands, exit codes, and report determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_curvinv")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_two_cusp_sextic() {
    let out = run(&["analyze", fixture("two_cusp_sextic.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("total Tjurina number: 18"), "{text}");
    assert!(text.contains("nearly free with exponents (3, 3)"), "{text}");
    assert!(text.contains("genus: 0"), "{text}");
}

#[test]
fn analyze_writes_deterministic_json() {
    let dir = std::env::temp_dir();
    let path_a = dir.join("curvinv_report_a.json");
    let path_b = dir.join("curvinv_report_b.json");
    for path in [&path_a, &path_b] {
        let out = run(&[
            "analyze",
            fixture("nodal_cubic.json").to_str().unwrap(),
            "--json",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert_eq!(a, b, "reports must be byte-identical across runs");
    let parsed: serde_json::Value = serde_json::from_slice(&a).unwrap();
    for key in [
        "degree",
        "tau",
        "freeness",
        "nf_dims",
        "genus",
        "singularities",
        "alexander_bound",
        "h2_lower_bounds",
        "betti",
        "warnings",
    ] {
        assert!(parsed.get(key).is_some(), "missing top-level key {key}");
    }
    assert_eq!(parsed["tau"], 1);
    let _ = std::fs::remove_file(path_a);
    let _ = std::fs::remove_file(path_b);
}

#[test]
fn freeness_subcommand() {
    let out = run(&["freeness", fixture("e6_e14.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("tau: 19"), "{text}");
    assert!(text.contains("classification: free(2,3)"), "{text}");
}

#[test]
fn local_subcommand() {
    let out = run(&["local", "--pairs", "2,3;2,3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("milnor number: 18"), "{text}");
    assert!(text.contains("delta invariant: 9"), "{text}");
    assert!(text.contains("Phi_6 * Phi_10 * Phi_12 * Phi_30"), "{text}");
}

#[test]
fn bound_subcommand() {
    let out = run(&["bound", fixture("two_cusp_sextic.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("before filter: Phi_6^2"), "{text}");
    assert!(text.contains("after filter:  Phi_6^2"), "{text}");
}

#[test]
fn verify_paper_subset() {
    let out = run(&["verify-paper", "--only", "zariski"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("zariski-prime-powers"), "{text}");
    assert!(text.contains("1/1 rows passed"), "{text}");
}

#[test]
fn missing_file_exits_one() {
    let out = run(&["analyze", "/nonexistent/curve.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_json_exits_one() {
    let dir = std::env::temp_dir();
    let path = dir.join("curvinv_bad.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let _ = std::fs::remove_file(path);
}

#[test]
fn validation_error_exits_one() {
    let dir = std::env::temp_dir();
    let path = dir.join("curvinv_mismatch.json");
    std::fs::write(
        &path,
        r#"{"name":"bad","equation":"x^2 + y^2 + z^2","irreducible":true,"components":2,"singularities":[]}"#,
    )
    .unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let _ = std::fs::remove_file(path);
}

#[test]
fn resource_limit_exits_two() {
    let out = run(&[
        "analyze",
        fixture("two_cusp_sextic.json").to_str().unwrap(),
        "--max-steps",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_pairs_exit_one() {
    let out = run(&["local", "--pairs", "2,4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["local", "--pairs", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
}
