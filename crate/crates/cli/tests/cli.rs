use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn zetaseries(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetaseries"))
        .args(args)
        .env_remove("ZETASERIES_TOL")
        .env_remove("ZETASERIES_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("zetaseries-{}-{name}", std::process::id()))
}

#[test]
fn eval_both_reports_closed_oracle_and_difference() {
    let out = zetaseries(&["eval", "P", "--n", "1", "--z", "1", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    let closed = doc["closed"]["value"].as_f64().unwrap();
    let oracle = doc["oracle"]["value"].as_f64().unwrap();
    assert!((closed + 0.4714172242).abs() < 1e-9, "{closed}");
    assert!((closed - oracle).abs() < 1e-10);
    assert!(doc["abs_diff"].as_f64().unwrap() < 1e-10);
    assert_eq!(doc["closed"]["identity"], "polylog_p");
}

#[test]
fn eval_single_method_omits_the_other() {
    let doc = stdout_json(&zetaseries(&[
        "eval", "KKPlusN", "--n", "2", "--z", "1", "--sign", "positive", "--method", "closed",
    ]));
    assert!(doc.get("oracle").is_none());
    let v = doc["closed"]["value"].as_f64().unwrap();
    let pi = std::f64::consts::PI;
    let expect = -0.125 + (2.0 * pi).ln() / 2.0 + 3.0 * 1.2020569031595942 / (2.0 * pi * pi);
    assert!((v - expect).abs() < 1e-12);

    let doc = stdout_json(&zetaseries(&["eval", "DilogSum", "--p", "2", "--z", "0.5", "--method", "oracle"]));
    assert!(doc.get("closed").is_none());
    assert!(doc["oracle"]["value"].is_f64());
}

#[test]
fn eval_domain_error_exits_two() {
    let out = zetaseries(&["eval", "Q", "--m", "2", "--z", "-0.5"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("0 < z <= 1"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_closed_form_exits_two() {
    let out =
        zetaseries(&["eval", "Ppow", "--n", "1", "--p", "2", "--z", "0.5", "--sign", "positive", "--method", "closed"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two_with_usage_text() {
    for args in [
        &["bogus"][..],
        &["eval", "P", "--n", "1"],
        &["verify", "--format", "xml"],
        &["verify", "--suite", "nope"],
        &["eval", "P", "--z", "1", "--frobnicate"],
    ] {
        let out = zetaseries(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains("Usage") || err.contains("--help"), "{args:?}: {err}");
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(zetaseries(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_all_exits_zero_and_every_row_passes() {
    let out = zetaseries(&["verify", "--suite", "all", "--tol", "1e-9", "--format", "csv", "--jobs", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    let passed = headers.iter().position(|h| h == "passed").unwrap();
    let mut rows = 0;
    for rec in rdr.records() {
        assert_eq!(&rec.unwrap()[passed], "true");
        rows += 1;
    }
    assert!(rows >= 300, "{rows} rows");
}

#[test]
fn csv_is_byte_identical_across_job_counts() {
    let a = zetaseries(&["verify", "--suite", "fibonacci", "--format", "csv", "--jobs", "1"]);
    let b = zetaseries(&["verify", "--suite", "fibonacci", "--format", "csv", "--jobs", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_writes_report_to_file() {
    let path = temp_path("examples.md");
    let out = zetaseries(&["verify", "--suite", "examples", "--format", "markdown", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.contains("40 passed / 40 total"), "{text}");
    assert!(text.contains("| example_p_pos_n1_z_half | n=1;z=0.5 | 0.14472988584940"));
}

#[test]
fn environment_tolerance_applies_and_flag_wins() {
    let bad_env = Command::new(env!("CARGO_BIN_EXE_zetaseries"))
        .args(["verify", "--suite", "special_values"])
        .env("ZETASERIES_TOL", "-1")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_zetaseries"))
        .args(["verify", "--suite", "special_values", "--tol", "1e-12", "--format", "json"])
        .env("ZETASERIES_TOL", "-1")
        .env("ZETASERIES_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(flag_wins.status.code(), Some(0));
    let doc = stdout_json(&flag_wins);
    let tols: Vec<f64> = doc.as_array().unwrap().iter().map(|r| r["tolerance"].as_f64().unwrap()).collect();
    assert!(tols.contains(&1e-12));
    assert!(tols.iter().all(|t| *t < 1e-10));
}

#[test]
fn constants_prints_the_table() {
    let out = zetaseries(&["constants"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert!((doc["catalan"].as_f64().unwrap() - 0.915965594177219).abs() < 1e-15);
    assert_eq!(doc["zeta_odd"].as_array().unwrap().len(), 15);
}
