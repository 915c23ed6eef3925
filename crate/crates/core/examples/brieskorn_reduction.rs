//! Express forms `h·α` in the chain basis of the Brieskorn lattice, as powers
//! of `τ^{-1}` with coefficients polynomial in `t`.
//!
//! `cargo run --example brieskorn_reduction -- "x^5*y + x^3"`

use curvefrob::gaussmanin::BrieskornLattice;
use curvefrob::rational::ratio;
use curvefrob::{parse_polynomial, CurveFunctionPair, WeightSystem};

fn main() {
    let pair = CurveFunctionPair::validate(
        parse_polynomial("x").unwrap(),
        parse_polynomial("x^3 + y^2").unwrap(),
        WeightSystem::new(ratio(1, 1), ratio(3, 2)).unwrap(),
    )
    .unwrap();
    let lattice = BrieskornLattice::new(&pair).unwrap();
    let basis: Vec<String> = lattice
        .chains()
        .representatives()
        .iter()
        .map(|r| r.to_string())
        .collect();
    println!("chain basis: {}", basis.join(", "));

    let mut forms: Vec<String> = std::env::args().skip(1).collect();
    if forms.is_empty() {
        forms = ["x^3", "x^4", "x^2*y", "y^2", "x^6 + y"].map(String::from).to_vec();
    }
    for text in forms {
        let h = parse_polynomial(&text).expect("polynomial");
        let r = lattice.reduce(&h).unwrap();
        if r.levels.is_empty() {
            println!("[{h} alpha] = 0");
            continue;
        }
        println!("[{h} alpha] =");
        for (k, coeffs) in &r.levels {
            let terms: Vec<String> = coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| format!("({c}) w{i}"))
                .collect();
            println!("  tau^-{k}: {}", terms.join(" + "));
        }
    }
}
