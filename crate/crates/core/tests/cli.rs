//! The `cofull` binary: exit codes, JSON output, caching and sweeps.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn cofull(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cofull"));
    cmd.args(args).env_remove("COFULL_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("COFULL_CACHE_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn session(name: &str) -> String {
    format!("{}/examples/sessions/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stripped(out: &Output) -> String {
    cofull::session::strip_timing(&json(out)).to_string()
}

#[test]
fn successful_run_exits_zero_with_one_report_per_command() {
    let out = cofull(&["run", &session("smallest.cofull"), "--json"], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    for key in ["command", "input_echo", "result", "witnesses", "certifications", "timing_ms", "engine_version"] {
        assert!(reports[0].get(key).is_some(), "missing {key}");
    }
    assert_eq!(reports[0]["witnesses"], Value::Array(vec![]));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.cofull", "ring S = F5[x,y];\nideal I = (w);\n");
    let out = cofull(&["run", f.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("2:12") && err.contains("E_BINDING"), "{err}");
}

#[test]
fn precondition_failures_exit_three_but_later_commands_still_run() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "q.cofull", "ring S = Q[x,y]; ideal I = (x*y); fullness I; gb I;");
    let out = cofull(&["run", f.to_str().unwrap(), "--json"], None);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v[0]["result"]["error"]["code"], "E_CHARACTERISTIC");
    assert!(v[1]["result"]["basis"].is_array());
}

#[test]
fn missing_file_exits_one() {
    let out = cofull(&["run", "/nonexistent/session.cofull"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_deterministic_apart_from_timing() {
    let args = ["run", &session("tour.cofull"), "--json"];
    let (a, b) = (cofull(&args, None), cofull(&args, None));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stripped(&a), stripped(&b));
}

#[test]
fn cache_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let path = session("thick_point.cofull");
    let plain = cofull(&["run", &path, "--json"], None);
    let cold = cofull(&["run", &path, "--json", "--cache-dir", dir.path().to_str().unwrap()], None);
    let warm = cofull(&["run", &path, "--json"], Some(dir.path()));
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0, "cache stayed empty");
    assert_eq!(stripped(&plain), stripped(&cold));
    assert_eq!(stripped(&plain), stripped(&warm));
}

#[test]
fn corrupted_cache_entries_are_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let path = session("thick_point.cofull");
    let plain = cofull(&["run", &path, "--json"], None);
    cofull(&["run", &path, "--json"], Some(dir.path()));
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let p = entry.unwrap().path();
        let text = std::fs::read_to_string(&p).unwrap();
        // keep the header, damage the basis
        let damaged: String = text.lines().take(3).map(|l| format!("{l}\n")).collect::<String>() + "x + 1\n";
        std::fs::write(&p, damaged).unwrap();
    }
    let after = cofull(&["run", &path, "--json"], Some(dir.path()));
    assert_eq!(after.status.code(), Some(0));
    assert_eq!(stripped(&plain), stripped(&after));
}

#[test]
fn sweep_reports_each_prime() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "cubic.cofull", "ring C = F5[x,y,z]; fedder (x^3 + y^3 + z^3);");
    let out = cofull(&["sweep", f.to_str().unwrap(), "--primes", "5,7,11,13", "--json"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v[0]["result"]["verdicts"], serde_json::json!({"5": false, "7": true, "11": false, "13": true}));
    assert_eq!(v[0]["result"]["primes"], serde_json::json!([5, 7, 11, 13]));
}

#[test]
fn text_output_echoes_commands_and_threads_flag_is_accepted() {
    let out = cofull(&["run", &session("smallest.cofull"), "--threads", "2"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("> fullness I\n"), "{text}");
}

#[test]
fn e_max_two_agrees_with_e_max_one() {
    let path = session("thick_point.cofull");
    let one: Value = json(&cofull(&["run", &path, "--json"], None));
    let two: Value = json(&cofull(&["run", &path, "--json", "--e-max", "2"], None));
    for (a, b) in one.as_array().unwrap().iter().zip(two.as_array().unwrap()) {
        assert_eq!(a["result"].get("verdict"), b["result"].get("verdict"));
    }
}
