//! Spectrum of `f = x` on `g = x^k + y^2` from the Jordan chains, next to the
//! closed form.
//!
//! `cargo run --example ak_spectrum -- 12`

use curvefrob::gaussmanin::{ak_spectrum_oracle, spectrum};
use curvefrob::rational::ratio;
use curvefrob::{parse_polynomial, CurveFunctionPair, WeightSystem};

fn show(pairs: &[(String, usize)]) -> String {
    pairs
        .iter()
        .map(|(l, m)| format!("({l}, {m})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() {
    let top: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    for k in 2..=top {
        let pair = CurveFunctionPair::validate(
            parse_polynomial("x").unwrap(),
            parse_polynomial(&format!("x^{k} + y^2")).unwrap(),
            WeightSystem::new(ratio(1, 1), ratio(k, 2)).unwrap(),
        )
        .unwrap();
        let computed = spectrum(&pair).unwrap();
        let closed = ak_spectrum_oracle(k).unwrap();
        let mark = if computed == closed { "ok" } else { "MISMATCH" };
        println!("k = {k:>2}  {:<40} {mark}", show(&computed.to_pairs()));
    }
}
