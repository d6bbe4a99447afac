use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn grasstwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grasstwist"))
        .args(args)
        .env_remove("GRASSTWIST_KMAX")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = grasstwist(args);
    serde_json::from_slice(&out.stdout).expect("json output")
}

/// Drops the timing field so reports can be compared byte for byte.
fn strip_timing(mut v: Value) -> Value {
    if let Some(m) = v.as_object_mut() {
        m.remove("elapsed_ms");
    }
    v
}

#[test]
fn bott_top_cohomology_is_det_v() {
    let v = json(&["bott", "--r", "1", "--d", "4", "--alpha", "-4"]);
    assert_eq!(v["status"], "computed");
    assert_eq!(v["payload"]["degree"], 3);
    assert_eq!(v["payload"]["rep"], "det V");
    assert_eq!(v["payload"]["dim"], 1);
}

#[test]
fn bott_acyclic_weight() {
    let v = json(&["bott", "--r", "1", "--d", "4", "--alpha", "-2"]);
    assert_eq!(v["payload"]["dim"], 0);
    assert!(v["payload"]["degree"].is_null());
}

#[test]
fn rf_example() {
    let v = json(&["rf", "--d", "4", "--k", "1"]);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["payload"]["survivors"], serde_json::json!(["l^1", "l^1[-5]"]));
}

#[test]
fn twist_matrix_is_six_by_six() {
    let v = json(&["twist-k", "--d", "4"]);
    let m = v["payload"]["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 6);
    assert!(m.iter().all(|row| row.as_array().unwrap().len() == 6));
    assert_eq!(v["payload"]["analysis"]["graded"]["rank_m_minus_i"], 3);
}

#[test]
fn lr_example() {
    let v = json(&["lr", "--lambda", "2,1,0", "--mu", "2,1,0"]);
    assert_eq!(v["payload"]["dimension"], 64);
}

#[test]
fn cauchy_passes() {
    let v = json(&["cauchy", "--k", "3", "--d", "4"]);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["payload"]["expected_dimension"], 120);
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        &["bott", "--r", "2", "--d", "4", "--alpha", "1,2,3"][..],
        &["rf", "--d", "4", "--k", "9"][..],
        &["lr", "--lambda", "a,b", "--mu", "1"][..],
        &["geometry", "--d", "1"][..],
        &["no-such-command"][..],
    ] {
        let out = grasstwist(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn input_error_prints_usage() {
    let out = grasstwist(&["rf", "--d", "4", "--k", "9"]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("Usage: grasstwist rf"), "{stderr}");
}

#[test]
fn kmax_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_grasstwist"))
        .args(["rhom", "--d", "4", "--alpha", "0,0", "--beta", "1,0"])
        .env("GRASSTWIST_KMAX", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["k_max"], 3);
    assert_eq!(v["payload"]["euler"].as_array().unwrap().len(), 4);

    let flag = json(&["rhom", "--d", "4", "--alpha", "0,0", "--beta", "1,0", "--kmax", "5"]);
    assert_eq!(flag["k_max"], 5);
    let default = json(&["rhom", "--d", "4", "--alpha", "0,0", "--beta", "1,0"]);
    assert_eq!(default["k_max"], 12);
}

#[test]
fn output_is_deterministic() {
    let args = ["tilting-check", "--d", "4", "--kmax", "6"];
    assert_eq!(strip_timing(json(&args)), strip_timing(json(&args)));
}

#[test]
fn kclass_round_trips_through_json() {
    let v = json(&["kclass", "--d", "4", "--s-weight", "3,1", "--graded"]);
    let text = serde_json::to_string(&v).unwrap();
    let back: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v, back);
    assert_eq!(v["payload"]["coords"].as_array().unwrap().len(), 6);
}

#[test]
fn tsv_and_pretty_formats() {
    let tsv = grasstwist(&["--format", "tsv", "rhom", "--d", "3", "--alpha", "0,0", "--beta", "1,1", "--kmax", "2"]);
    assert!(tsv.status.success());
    let text = String::from_utf8(tsv.stdout).unwrap();
    assert!(text.lines().all(|l| l.contains('\t')), "{text}");

    let pretty = grasstwist(&["--format", "pretty", "geometry", "--d", "3"]);
    assert!(pretty.status.success());
    let text = String::from_utf8(pretty.stdout).unwrap();
    assert!(text.starts_with("geometry: pass"), "{text}");
}

fn golden_report(d: usize) -> String {
    let d = d.to_string();
    let runs: Vec<Vec<&str>> = vec![
        vec!["collection", "--d", &d],
        vec!["gram", "--d", &d],
        vec!["geometry", "--d", &d],
        vec!["koszul", "--k", "0", "--d", &d],
        vec!["adjoint", "--d", &d, "--all"],
        vec!["rf", "--d", &d, "--k", "1"],
        vec!["spherical-r1", "--d", &d],
        vec!["kclass", "--d", &d, "--f-class", "0", "--graded"],
        vec!["twist-k", "--d", &d],
        vec!["tilting-check", "--d", &d, "--kmax", "8"],
        vec!["rhom", "--space", "X0", "--d", &d, "--alpha", "0", "--beta", "1", "--kmax", "6"],
    ];
    let reports: Vec<Value> = runs.iter().map(|args| strip_timing(json(args))).collect();
    serde_json::to_string_pretty(&reports).unwrap() + "\n"
}

#[test]
fn golden_reports() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for d in 3..=5 {
        let path = dir.join(format!("d{d}.json"));
        let report = golden_report(d);
        if update {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, &report).unwrap();
        }
        let expected = std::fs::read_to_string(&path).expect("golden file; regenerate with UPDATE_GOLDEN=1");
        assert!(report == expected, "d={d} differs from {}", path.display());
    }
}
