//! Emitted documents validate against the schemas shipped in `docs/`.

mod common;

use std::path::PathBuf;

use curvefrob::report::{load_problem, run_subcommand, Command, ExitCode, RunOptions};
use serde_json::Value;

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs").join(name);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&doc).unwrap()
}

fn assert_valid(v: &jsonschema::Validator, doc: &Value, what: &str) {
    let errors: Vec<String> = v
        .iter_errors(doc)
        .map(|e| format!("{} at {}", e, e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "{what}: {errors:?}");
}

const INPUTS: [&str; 4] = [
    r#"{"weights":{"x":"1","y":"3/2"},"f":"x","g":"x^3 + y^2"}"#,
    r#"{"weights":{"x":"1","y":"1"},"f":"x + y","g":"x*y"}"#,
    r#"{"weights":{"x":"1/2","y":"1/3"},"f":"x^2 + y^3","g":"x*y","seed":3,"t_samples":["2","-1/3"]}"#,
    r#"{"weights":{"x":"2","y":"3"},"f":"x*y","g":"x^3 + y^2","u_samples":[["0","0","0","0","0","0"],["1/2","0","0","0","0","0"]]}"#,
];

#[test]
fn every_subcommand_output_validates() {
    let report = schema("report.schema.json");
    let dir = tempfile::tempdir().unwrap();
    for (n, body) in INPUTS.iter().enumerate() {
        let path = dir.path().join(format!("in{n}.json"));
        std::fs::write(&path, body).unwrap();
        for cmd in [
            Command::Analyze,
            Command::Spectrum,
            Command::Connection,
            Command::Frobenius,
            Command::Verify,
        ] {
            let opts = RunOptions {
                input: Some(path.clone()),
                ..RunOptions::default()
            };
            let out = run_subcommand(&cmd, &opts);
            assert_eq!(out.exit, ExitCode::Success, "{cmd:?} on {body}: {}", out.stderr);
            assert_valid(
                &report,
                &serde_json::from_str(&out.stdout).unwrap(),
                &format!("{cmd:?} {n}"),
            );
        }
    }
    for k in [2, 5] {
        let out = run_subcommand(&Command::Ak(k), &RunOptions::default());
        assert_valid(&report, &serde_json::from_str(&out.stdout).unwrap(), "ak");
    }
}

#[test]
fn error_documents_validate() {
    let report = schema("report.schema.json");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("smooth.json");
    std::fs::write(&path, r#"{"weights":{"x":"1","y":"1"},"f":"x","g":"x + y^2"}"#).unwrap();
    let opts = RunOptions {
        input: Some(path),
        ..RunOptions::default()
    };
    let out = run_subcommand(&Command::Analyze, &opts);
    assert_eq!(out.exit, ExitCode::InvalidInput);
    assert_valid(&report, &serde_json::from_str(&out.stderr).unwrap(), "error");
}

#[test]
fn input_schema_agrees_with_loader() {
    let input = schema("input.schema.json");
    let dir = tempfile::tempdir().unwrap();
    for (n, body) in INPUTS.iter().enumerate() {
        assert_valid(&input, &serde_json::from_str(body).unwrap(), "example input");
        let path = dir.path().join(format!("in{n}.json"));
        std::fs::write(&path, body).unwrap();
        assert!(load_problem(Some(&path)).is_ok());
    }
    let rejected = [
        r#"{"weights":{"x":"1","y":"1"},"f":"x"}"#,
        r#"{"weights":{"x":"1","y":"1"},"f":"x","g":"x*y","extra":1}"#,
        r#"{"weights":{"x":"1","y":"1","z":"1"},"f":"x","g":"x*y"}"#,
        r#"{"weights":{"x":"one","y":"1"},"f":"x","g":"x*y"}"#,
        r#"{"weights":{"x":"1","y":"1"},"f":"x","g":"x*y","seed":-1}"#,
        r#"{"weights":{"x":"1","y":"1"},"f":"x","g":"x*y","t_samples":[1]}"#,
    ];
    for body in rejected {
        let doc: Value = serde_json::from_str(body).unwrap();
        assert!(!input.is_valid(&doc), "schema accepts {body}");
        let path = dir.path().join("bad.json");
        std::fs::write(&path, body).unwrap();
        assert!(load_problem(Some(&path)).is_err(), "loader accepts {body}");
    }
}

#[test]
fn corpus_reports_validate() {
    let report = schema("report.schema.json");
    for (name, pair) in common::corpus().into_iter().filter(|(_, p)| p.mu() <= 6).take(40) {
        let analysis = curvefrob::report::Analysis::new(&pair).unwrap();
        let doc = serde_json::to_value(analysis.report(Vec::new(), Vec::new()).unwrap()).unwrap();
        assert_valid(&report, &doc, &name);
    }
}
