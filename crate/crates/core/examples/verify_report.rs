//! Run the whole verification suite on one pair and emit the JSON report.
//!
//! `cargo run --example verify_report -- "x^2 + y^3" "x*y" 1/2 1/3`

use curvefrob::curve::default_t_samples;
use curvefrob::rational::parse_rational;
use curvefrob::report::{emit_json, run_verification, Analysis, VerifyOptions};
use curvefrob::{parse_polynomial, CurveFunctionPair, WeightSystem};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let pair = CurveFunctionPair::validate(
        parse_polynomial(&arg(0, "x + y")).unwrap(),
        parse_polynomial(&arg(1, "x*y")).unwrap(),
        WeightSystem::new(
            parse_rational(&arg(2, "1")).unwrap(),
            parse_rational(&arg(3, "1")).unwrap(),
        )
        .unwrap(),
    );
    let pair = match pair {
        Ok(p) => p,
        Err(e) => {
            eprintln!("invalid input: {} ({e})", e.code());
            std::process::exit(3);
        }
    };
    let analysis = Analysis::new(&pair).unwrap();
    let opts = VerifyOptions {
        seed: 7,
        t_samples: default_t_samples(7),
        u_samples: Vec::new(),
    };
    let (checks, probes) = run_verification(&analysis, &opts);
    for c in &checks {
        eprintln!("{:<26} {}", c.name, if c.pass { "pass" } else { "FAIL" });
    }
    let failed = checks.iter().any(|c| !c.pass);
    print!("{}", emit_json(&analysis.report(checks, probes).unwrap(), true));
    if failed {
        std::process::exit(1);
    }
}
