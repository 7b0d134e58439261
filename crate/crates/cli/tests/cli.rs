use std::process::{Command, Output};

use howe_core::GradedSeries;
use serde_json::Value;

fn howe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_howe"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn lr_prints_the_coefficient() {
    let o = howe(&["lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn lr_accepts_negative_parts() {
    let o = howe(&["lr", "--lambda", "1,-1", "--mu", "1,0", "--nu", "0,-1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn char_matches_hookschur_and_round_trips() {
    let c = howe(&[
        "char", "--m", "1", "--n", "1", "--p", "0", "--q", "0", "--d", "2", "--lambda", "2,0", "--trunc", "6",
        "--format", "json",
    ]);
    assert!(c.status.success());
    let text = stdout(&c);
    let series = GradedSeries::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(serde_json::to_string(&series.to_json()).unwrap(), text.trim_end());

    let h = howe(&["hookschur", "--m", "1", "--n", "1", "--lambda", "2", "--format", "json"]);
    let hook = GradedSeries::from_json(&serde_json::from_str(&stdout(&h)).unwrap()).unwrap();
    let hook = hook.embed(series.vars()).unwrap().truncate(6);
    assert_eq!(hook.same_as(&series), Ok(true));
}

#[test]
fn verify_reports_matching_weight() {
    let o = howe(&[
        "verify", "--m", "1", "--n", "1", "--p", "1", "--q", "1", "--d", "2", "--lambda", "1,-1", "--format", "json",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["matches_Lambda"], Value::Bool(true));
    assert_eq!(v["super_weight"], serde_json::json!([-2, 1, 1, 0]));
}

#[test]
fn exit_codes() {
    let inadmissible = howe(&["char", "--p", "1", "--d", "2", "--lambda", "1,-1"]);
    assert_eq!(inadmissible.status.code(), Some(1));
    let stderr = String::from_utf8(inadmissible.stderr).unwrap();
    assert_eq!(stderr.lines().count(), 1);
    let not_decreasing = howe(&["lr", "--lambda", "1,2", "--mu", "1", "--nu", "1"]);
    assert_eq!(not_decreasing.status.code(), Some(1));
    assert_eq!(
        howe(&["lr", "--lambda", "x", "--mu", "1", "--nu", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(howe(&["lr", "--bogus"]).status.code(), Some(2));
    assert_eq!(howe(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "branch",
        "--m",
        "1",
        "--n",
        "1",
        "--p",
        "1",
        "--q",
        "1",
        "--d",
        "2",
        "--lambda",
        "1,-1",
        "--bound",
        "3",
        "--format",
        "json",
        "--threads",
        "2",
    ];
    let a = howe(&args);
    let b = howe(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["complete"], Value::Bool(false));
    assert_eq!(v["entries"][0]["label"], serde_json::json!([[1, 0], [0, -1]]));
}

#[test]
fn oracle_passes_on_small_contexts() {
    let o = howe(&[
        "oracle", "--m", "1", "--n", "1", "--p", "1", "--q", "1", "--d", "2", "--trunc", "3",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "cauchy: pass\ndual_cauchy: pass\nfock: pass\n");
}

#[test]
fn tensor_table() {
    let o = howe(&[
        "tensor", "--m", "1", "--mu", "1", "--nu", "1", "--dmax", "2", "--format", "json",
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim_end(),
        r#"{"bound":2,"complete":true,"entries":[{"label":[2,0],"mult":"1"}]}"#
    );
}
