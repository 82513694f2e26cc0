use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> (Output, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_heckelab"))
        .args(args)
        .output()
        .expect("binary runs");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out, v)
}

#[test]
fn rankin_genus1_passes_with_four_factors() {
    let (out, v) = run(&["rankin", "--genus", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(v["status"], "pass");
    assert_eq!(v["details"]["denominator_factors"].as_array().unwrap().len(), 4);
}

#[test]
fn hodge_lift_check_passes() {
    let (out, v) = run(&["hodge", "--genus", "2", "--weight", "8", "--check-lift", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(v["details"]["spin"]["rank"], 4);
}

#[test]
fn missing_input_is_usage_error() {
    let (out, v) = run(&["newton", "--input", "missing.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(v["status"], "error");
}

#[test]
fn bad_flags_exit_2() {
    let (out, _) = run(&["gamma", "--kind", "spin9", "--weights", "12"]);
    assert_eq!(out.status.code(), Some(2));
    let (out, _) = run(&["rankin", "--genus"]);
    assert_eq!(out.status.code(), Some(2));
    let (out, _) = run(&["hodge", "--genus", "2", "--weight", "8", "--check-lift", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["gamma", "--kind", "triple", "--weights", "12,10,8"]).0.stdout;
    let b = run(&["gamma", "--kind", "triple", "--weights", "12,10,8"]).0.stdout;
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    let crit: Vec<i64> = serde_json::from_value(v["details"]["critical_values"].clone()).unwrap();
    assert_eq!(crit, (12..=16).collect::<Vec<_>>());
}

#[test]
fn newton_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("c.json");
    fs::write(&input, r#"{"p": 7, "coeffs": ["1977326743", "16744", 1]}"#).unwrap();
    let svg = dir.path().join("np.svg");
    let csv = dir.path().join("np.csv");
    let out_path = dir.path().join("report.json");
    let (out, _) = run(&[
        "newton",
        "--input",
        input.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["artifacts"].as_array().unwrap().len(), 2);
    assert_eq!(v["details"]["slopes"], serde_json::json!(["-10/1", "-1/1"]));
    assert_eq!(fs::read_to_string(&csv).unwrap(), "degree,valuation\n0,11\n1,1\n2,0\n");
    assert_eq!(fs::read_to_string(&svg).unwrap().matches("<polyline").count(), 1);
}

#[test]
fn family_csv_and_kummer() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("fam.csv");
    let (out, v) = run(&[
        "family", "--p", "5", "--weights", "2,6", "--bound", "10", "--kummer", "1", "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(v["status"], "pass");
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("n,k,a_n\n1,2,1\n2,2,3\n"));
    assert!(text.contains("\n2,6,33\n"));
    let (out, _) = run(&["family", "--p", "5", "--weights", "2,3", "--kummer", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dirichlet_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    fs::write(
        &f,
        r#"{"2": {"1": "1/1", "X^1": "-3/1", "X^2": "2/1"}, "3": {"1": "1/1", "X^1": "-1/1"}}"#,
    )
    .unwrap();
    let (out, v) = run(&["dirichlet", "--factors", f.to_str().unwrap(), "--bound", "12"]);
    assert_eq!(out.status.code(), Some(0));
    // 1/((1−X)(1−2X)) at 2: c_4 = 1 + 2 + 4
    assert_eq!(v["details"]["coefficients"]["4"], serde_json::json!({"1": "7/1"}));
    assert_eq!(v["details"]["coefficients"]["12"], serde_json::json!({"1": "7/1"}));
    assert_eq!(v["details"]["coefficients"]["5"], serde_json::json!({}));
}

#[test]
fn lift_and_euler_checks() {
    for args in [
        vec!["lift", "--check", "ikeda-standard", "--n", "1", "--weight", "10"],
        vec!["lift", "--check", "eisenstein", "--n", "1", "--weight", "10"],
        vec!["lift", "--check", "quadratic", "--weight", "7"],
        vec!["euler", "--type", "spinor", "--genus", "2", "--weight", "10"],
        vec!["euler", "--type", "standard", "--genus", "3"],
        vec!["euler", "--type", "triple"],
    ] {
        let (out, v) = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(v["status"], "pass");
    }
}
