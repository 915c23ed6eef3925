//! Grothendieck residue via the Bezoutian and the induced metric in the
//! monomial and chain bases.

use curvefrob::frobenius::{
    bezoutian_dual_basis, chain_frobenius_data, frobenius_axiom_check, monomial_frobenius_data, FrobeniusData,
};
use curvefrob::gaussmanin::homogeneous_jordan_chains;
use curvefrob::rational::ratio;
use curvefrob::{parse_polynomial, CurveFunctionPair, WeightSystem};

fn print_data(label: &str, data: &FrobeniusData) {
    let basis: Vec<String> = data.basis.iter().map(|b| b.to_string()).collect();
    println!("{label} basis: {}", basis.join(", "));
    println!("  normalized metric:");
    for row in data.metric_normalized.to_strings() {
        println!(
            "    [{}]",
            row.iter().map(|s| format!("{s:>4}")).collect::<Vec<_>>().join(" ")
        );
    }
    let failed: Vec<String> = frobenius_axiom_check(data)
        .into_iter()
        .filter(|c| !c.pass)
        .map(|c| c.name)
        .collect();
    println!(
        "  axioms: {}",
        if failed.is_empty() {
            "all hold".to_string()
        } else {
            failed.join(", ")
        }
    );
}

fn main() {
    let k: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let pair = CurveFunctionPair::validate(
        parse_polynomial("x").unwrap(),
        parse_polynomial(&format!("x^{k} + y^2")).unwrap(),
        WeightSystem::new(ratio(1, 1), ratio(k, 2)).unwrap(),
    )
    .unwrap();
    let res = bezoutian_dual_basis(&pair).unwrap();
    for (m, v) in res.staircase.iter().zip(&res.values) {
        println!("Res({m}) = {v}");
    }
    let dual: Vec<String> = res.dual_basis.iter().map(|d| d.to_string()).collect();
    println!("dual basis: {}", dual.join(", "));
    print_data("monomial", &monomial_frobenius_data(&pair).unwrap());
    let chains = homogeneous_jordan_chains(&pair).unwrap();
    print_data("chain", &chain_frobenius_data(&pair, &chains).unwrap());
}
