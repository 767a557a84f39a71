mod support;

use serde_json::Value;
use support::{run_all, srcomp};

#[test]
fn golden_cases() {
    let results = run_all();
    assert!(results.len() >= 20, "golden cases are missing");
    let failures: Vec<String> = results
        .into_iter()
        .filter_map(|(name, r)| r.err().map(|e| format!("{name}: {e}")))
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n\n"));
}

#[test]
fn format_can_come_from_the_environment() {
    let out = srcomp()
        .env("SRCOMP_FORMAT", "json")
        .args(["count", "--set", "{1,2}", "--n", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], "8");
    assert_eq!(v["engine"], "closed");
    assert!(v["elapsed_ms"].is_number());
}

#[test]
fn large_counts_stay_exact_strings() {
    let out = srcomp()
        .args(["count", "--set", "1..", "--n", "200", "--format", "json"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let expected = (num_bigint::BigUint::from(1u32) << 199usize).to_string();
    assert_eq!(v["count"], Value::String(expected));
}

#[test]
fn unbounded_term_counts_serialize_as_text() {
    let out = srcomp()
        .args(["count", "--set", "mod(1,2)", "--n", "9", "--format", "json"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["t2"], "unbounded");
    assert_eq!(v["count"], "34");
}

#[test]
fn bijection_report_is_consistent() {
    let out = srcomp()
        .args(["verify", "bijections", "--max-n", "20"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let verdicts = v.as_array().unwrap();
    assert_eq!(verdicts.len(), 5);
    assert_eq!(verdicts[1]["status"], "refuted");
}

#[test]
fn usage_errors_exit_with_two() {
    let out = srcomp().args(["count", "--set", "{1}"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = srcomp()
        .args(["count", "--set", "{1}", "--n", "3", "--engine", "fast"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
