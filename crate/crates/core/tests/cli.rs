//! Exit codes and output of the `curvefrob` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const A3: &str = r#"{"weights":{"x":"1","y":"3/2"},"f":"x","g":"x^3 + y^2"}"#;
const NODE: &str = r#"{"weights":{"x":"1","y":"1"},"f":"x + y","g":"x*y"}"#;
const SMOOTH: &str = r#"{"weights":{"x":"1","y":"1"},"f":"x","g":"x + y^2"}"#;

fn curvefrob(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvefrob"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).unwrap()
}

fn error_code(out: &Output) -> String {
    json(&out.stderr)["error"]["code"].as_str().unwrap().to_string()
}

#[test]
fn ak_four_matches_oracle() {
    let out = curvefrob(&["ak", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out.stdout);
    assert_eq!(v["oracle"], serde_json::json!([["0", "2"], ["1", "2"]]));
    assert_eq!(v["pipeline"], v["oracle"]);
    assert_eq!(v["diff"], serde_json::json!([]));
}

#[test]
fn ak_rejects_small_k() {
    let out = curvefrob(&["ak", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_code(&out), "InvalidK");
}

#[test]
fn verify_node_passes() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "node.json", NODE);
    let out = curvefrob(&["verify", input.to_str().unwrap(), "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out.stdout);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() > 20);
    assert!(checks.iter().all(|c| c["pass"] == Value::Bool(true)));
    assert!(!v["fibre_probes"].as_array().unwrap().is_empty());
}

#[test]
fn smooth_input_is_invalid() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "smooth.json", SMOOTH);
    for sub in ["analyze", "spectrum", "connection", "frobenius", "verify"] {
        let out = curvefrob(&[sub, input.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(3), "{sub}");
        assert_eq!(error_code(&out), "SmoothCurve");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn malformed_and_schema_violating_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("broken.json", "{\"weights\":", "MalformedJson"),
        (
            "extra.json",
            r#"{"weights":{"x":"1","y":"1"},"f":"x","g":"x*y","h":"y"}"#,
            "SchemaViolation",
        ),
        (
            "missing.json",
            r#"{"weights":{"x":"1","y":"1"},"f":"x"}"#,
            "SchemaViolation",
        ),
        (
            "short_u.json",
            r#"{"weights":{"x":"1","y":"1"},"f":"x + y","g":"x*y","u_samples":[["1"]]}"#,
            "ParameterLength",
        ),
        (
            "juxtaposed.json",
            r#"{"weights":{"x":"1","y":"1"},"f":"x","g":"2xy"}"#,
            "PolynomialSyntax",
        ),
    ];
    for (name, body, code) in cases {
        let input = write(dir.path(), name, body);
        let out = curvefrob(&["analyze", input.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(3), "{name}");
        assert_eq!(error_code(&out), code, "{name}");
    }
}

#[test]
fn usage_errors() {
    assert_eq!(curvefrob(&["bogus"]).status.code(), Some(2));
    assert_eq!(curvefrob(&[]).status.code(), Some(2));
    assert_eq!(curvefrob(&["ak"]).status.code(), Some(2));
    assert_eq!(curvefrob(&["ak", "4", "--t-samples", "1,x"]).status.code(), Some(2));
}

#[test]
fn section_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "a3.json", A3);
    let path = input.to_str().unwrap();

    let out = curvefrob(&["spectrum", path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "[[\"0\",\"1\"],[\"1/2\",\"1\"],[\"1\",\"1\"]]\n"
    );

    let out = curvefrob(&["connection", path]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out.stdout);
    assert_eq!(v["ainf"][1][1], "-1/2");
    assert_eq!(v["a0"][1][0], "1");

    let out = curvefrob(&["frobenius", path]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out.stdout);
    assert_eq!(v["basis_monomials"], serde_json::json!(["1", "x", "x^2"]));
    assert_eq!(v["residue"]["socle_residue"], "1/2");

    let out = curvefrob(&["analyze", path]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out.stdout);
    assert_eq!(v["checks"], serde_json::json!([]));
    assert_eq!(v["milnor"]["mu"], 3);
}

#[test]
fn stdin_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_curvefrob"))
        .arg("spectrum")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(NODE.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out.stdout), serde_json::json!([["0", "1"], ["1", "1"]]));
}

#[test]
fn output_file_and_pretty() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "a3.json", A3);
    let target = dir.path().join("out.json");
    let out = curvefrob(&[
        "analyze",
        input.to_str().unwrap(),
        "--output",
        target.to_str().unwrap(),
        "--pretty",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&target).unwrap();
    assert!(text.starts_with("{\n  \""));
    let compact = curvefrob(&["analyze", input.to_str().unwrap()]);
    assert_eq!(json(text.as_bytes()), json(&compact.stdout));
    assert_eq!(compact.stdout.iter().filter(|b| **b == b'\n').count(), 1);

    let missing = dir.path().join("no/such/dir/out.json");
    let out = curvefrob(&[
        "analyze",
        input.to_str().unwrap(),
        "--output",
        missing.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_code(&out), "OutputUnwritable");
}

#[test]
fn keys_are_sorted() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "node.json", NODE);
    let out = curvefrob(&["analyze", input.to_str().unwrap()]);
    let v = json(&out.stdout);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.find("\"chains\"").unwrap() < text.find("\"checks\"").unwrap());
}

#[test]
fn seed_and_t_samples_flags() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "node.json", NODE);
    let path = input.to_str().unwrap();
    let a = curvefrob(&["verify", path, "--seed", "1"]);
    let b = curvefrob(&["verify", path, "--seed", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_ne!(a.stdout, b.stdout);
    let out = curvefrob(&["verify", path, "--t-samples", "3,-1/2"]);
    let v = json(&out.stdout);
    let t0s: Vec<&str> = v["fibre_probes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["t0"].as_str().unwrap())
        .collect();
    assert!(t0s.iter().all(|t| *t == "3" || *t == "-1/2"));
    assert!(t0s.contains(&"-1/2"));
}
