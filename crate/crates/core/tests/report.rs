//! Report assembly, serialization round trips and determinism.

mod common;

use curvefrob::rational::{rat, ratio};
use curvefrob::report::{emit_json, run_checks, run_verification, Analysis, Report, VerifyOptions};
use curvefrob::CurveFunctionPair;
use proptest::prelude::*;

fn small_corpus() -> Vec<(String, CurveFunctionPair)> {
    common::corpus().into_iter().filter(|(_, p)| p.mu() <= 8).collect()
}

fn options(seed: u64) -> VerifyOptions {
    VerifyOptions {
        seed,
        t_samples: vec![rat(1), ratio(-5, 3)],
        u_samples: Vec::new(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reports_round_trip(index in 0usize..1000, seed in 0u64..50, pretty in any::<bool>()) {
        let corpus = small_corpus();
        let (_, pair) = &corpus[index % corpus.len()];
        let analysis = Analysis::new(pair).unwrap();
        let (checks, probes) = run_verification(&analysis, &options(seed));
        let report = analysis.report(checks, probes).unwrap();
        let text = emit_json(&report, pretty);
        let back: Report = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &report);
        prop_assert_eq!(emit_json(&back, pretty), text);
    }
}

#[test]
fn empty_checks_serialize_as_empty_list() {
    let pair = common::ak(3);
    let report = Analysis::new(&pair).unwrap().report(Vec::new(), Vec::new()).unwrap();
    let text = emit_json(&report, false);
    assert!(text.contains(r#""checks":[]"#));
    assert!(text.contains(r#""fibre_probes":[]"#));
    assert!(text.contains(r#""spectrum":[["0","1"],["1/2","1"],["1","1"]]"#));
    assert!(text.ends_with("}\n"));
}

#[test]
fn rationals_are_strings() {
    let pair = common::mirror(2, 3);
    let report = Analysis::new(&pair).unwrap().report(Vec::new(), Vec::new()).unwrap();
    let v = serde_json::to_value(&report).unwrap();
    fn walk(v: &serde_json::Value, path: &str, out: &mut Vec<String>) {
        match v {
            serde_json::Value::Number(_) => out.push(path.to_string()),
            serde_json::Value::Array(a) => a.iter().for_each(|x| walk(x, path, out)),
            serde_json::Value::Object(o) => o.iter().for_each(|(k, x)| walk(x, &format!("{path}.{k}"), out)),
            _ => {}
        }
    }
    let mut numeric = Vec::new();
    walk(&v, "", &mut numeric);
    numeric.sort();
    numeric.dedup();
    // only counts and indices are JSON numbers
    assert_eq!(
        numeric,
        vec![
            ".connection.basis_labels",
            ".frobenius.chain_basis.unit_index",
            ".frobenius.monomial_basis.unit_index",
            ".milnor.mu",
            ".milnor.mu1",
            ".milnor.mu2",
        ]
    );
}

#[test]
fn verification_is_deterministic_and_complete() {
    let pair = common::general(3, 2);
    let analysis = Analysis::new(&pair).unwrap();
    let a = run_verification(&analysis, &options(11));
    let b = run_verification(&analysis, &options(11));
    assert_eq!(a, b);
    let names: Vec<&str> = a.0.iter().map(|c| c.name.as_str()).collect();
    for required in [
        "milnor_additivity",
        "kernel_identity",
        "euler_identity",
        "nu_positivity",
        "mu_constancy",
        "chain_head_nu",
        "connection_shape",
        "connection_dual_route",
        "residue_dual_basis",
        "residue_euler_jacobi",
        "frobenius_associativity",
        "nilpotency",
        "primitivity",
        "fibre_dimension",
    ] {
        assert!(names.contains(&required), "{required} missing from {names:?}");
    }
    assert!(a.0.iter().all(|c| c.pass));
    assert_eq!(run_checks(&analysis, &options(11)), a.0);
}
