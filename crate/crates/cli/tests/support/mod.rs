//! Runs the golden cases under `tests/golden`.
//!
//! Each case file holds the arguments, the expected exit code and either the
//! exact stdout text or the stdout JSON (compared after parsing, with the
//! timing field removed). `stderr_contains` optionally pins a diagnostic.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

pub fn srcomp() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_srcomp"));
    cmd.env_remove("SRCOMP_FORMAT");
    cmd
}

fn strip_timing(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.remove("elapsed_ms");
    }
    v
}

/// Runs one case file; the error describes the first difference.
pub fn run_case(path: &Path) -> Result<(), String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let case: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let args: Vec<&str> = case["args"]
        .as_array()
        .ok_or("case has no args")?
        .iter()
        .map(|a| a.as_str().unwrap_or_default())
        .collect();
    let out = srcomp().args(&args).output().map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    let stderr = String::from_utf8_lossy(&out.stderr);

    let want_code = case["exit_code"].as_i64().ok_or("case has no exit_code")?;
    let code = out.status.code().map(i64::from);
    if code != Some(want_code) {
        return Err(format!(
            "exit code {code:?}, expected {want_code}; stderr: {stderr}"
        ));
    }
    if let Some(want) = case.get("stdout_json") {
        let got: Value = serde_json::from_str(&stdout)
            .map_err(|e| format!("stdout is not JSON ({e}): {stdout}"))?;
        if got.get("elapsed_ms").is_some_and(|t| !t.is_number()) {
            return Err("elapsed_ms is not a number".into());
        }
        if strip_timing(got.clone()) != *want {
            return Err(format!("stdout JSON differs:\n{got:#}\nexpected\n{want:#}"));
        }
    }
    if let Some(want) = case.get("stdout").and_then(Value::as_str) {
        if stdout != want {
            return Err(format!("stdout {stdout:?}, expected {want:?}"));
        }
    }
    if let Some(want) = case.get("stderr_contains").and_then(Value::as_str) {
        if !stderr.contains(want) {
            return Err(format!("stderr {stderr:?} does not mention {want:?}"));
        }
    }
    Ok(())
}

/// Every case in the golden directory, sorted by name, with its outcome.
pub fn run_all() -> Vec<(String, Result<(), String>)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(golden_dir())
        .expect("golden directory exists")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            (name, run_case(p))
        })
        .collect()
}
