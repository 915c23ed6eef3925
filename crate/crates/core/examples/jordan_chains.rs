//! Homogeneous Jordan chains of `−f` and the resulting spectrum for the node
//! and for `f = x^a + y^b` on `g = xy`.

use curvefrob::gaussmanin::{homogeneous_jordan_chains, lambda_clamp, spectrum};
use curvefrob::rational::ratio;
use curvefrob::{parse_polynomial, CurveFunctionPair, WeightSystem};

fn describe(name: &str, pair: &CurveFunctionPair) {
    println!("{name}: mu = {}", pair.mu());
    let chains = homogeneous_jordan_chains(pair).unwrap();
    for (i, chain) in chains.chains().iter().enumerate() {
        let steps: Vec<String> = chain
            .vectors
            .iter()
            .map(|v| format!("{} (nu {}, lambda {})", v.representative, v.nu, lambda_clamp(&v.nu)))
            .collect();
        println!("  chain {i}: {}", steps.join(" -> "));
    }
    let s = spectrum(pair).unwrap();
    println!(
        "  spectrum {:?}, symmetry defect {:?}",
        s.to_pairs(),
        s.symmetry_defect()
    );
}

fn main() {
    let node = CurveFunctionPair::validate(
        parse_polynomial("x + y").unwrap(),
        parse_polynomial("x*y").unwrap(),
        WeightSystem::from_ints(1, 1).unwrap(),
    )
    .unwrap();
    describe("node", &node);
    for (a, b) in [(2, 3), (3, 4), (4, 6)] {
        let pair = CurveFunctionPair::validate(
            parse_polynomial(&format!("x^{a} + y^{b}")).unwrap(),
            parse_polynomial("x*y").unwrap(),
            WeightSystem::new(ratio(1, a), ratio(1, b)).unwrap(),
        )
        .unwrap();
        describe(&format!("P({a},{b})"), &pair);
    }
}
