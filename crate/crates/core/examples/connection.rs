//! Connection matrices `A0`, `A_inf` in the corrected chain basis, checked
//! against an independent Brieskorn-lattice computation of `∂_τ`.

use curvefrob::gaussmanin::{
    connection_consistency_check, connection_matrices, connection_shape_check, tilde_basis, BrieskornLattice,
};
use curvefrob::rational::ratio;
use curvefrob::{parse_polynomial, CurveFunctionPair, QMatrix, WeightSystem};

fn print_matrix(name: &str, m: &QMatrix) {
    println!("{name}:");
    for row in m.to_strings() {
        println!(
            "  [{}]",
            row.iter().map(|s| format!("{s:>5}")).collect::<Vec<_>>().join(" ")
        );
    }
}

fn main() {
    let k: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let pair = CurveFunctionPair::validate(
        parse_polynomial("x").unwrap(),
        parse_polynomial(&format!("x^{k} + y^2")).unwrap(),
        WeightSystem::new(ratio(1, 1), ratio(k, 2)).unwrap(),
    )
    .unwrap();
    let conn = connection_matrices(&pair).unwrap();
    print_matrix("A0", &conn.a0);
    print_matrix("A_inf", &conn.ainf);

    let lattice = BrieskornLattice::new(&pair).unwrap();
    println!("tilde basis:");
    for (i, t) in tilde_basis(lattice.chains()).iter().enumerate() {
        println!("  w~{i} = {:?}", t.to_strings());
    }
    for c in [
        connection_shape_check(lattice.chains(), &conn),
        connection_consistency_check(&lattice, &conn),
    ] {
        println!("{}: {} ({})", c.name, if c.pass { "pass" } else { "FAIL" }, c.details);
    }
}
