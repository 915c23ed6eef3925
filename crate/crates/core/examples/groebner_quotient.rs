//! Gröbner basis, staircase and multiplication matrices of a zero-dimensional
//! quotient.

use curvefrob::{parse_polynomial, GroebnerBasis, MonomialOrder, QuotientRing, WeightSystem};

fn main() {
    let order = MonomialOrder::new(WeightSystem::from_ints(2, 3).unwrap());
    let gens = [parse_polynomial("x^3 + y^2").unwrap(), parse_polynomial("2*y").unwrap()];
    let gb = GroebnerBasis::new(&gens, &order).unwrap();
    println!("Gröbner basis:");
    for g in gb.generators() {
        println!("  {g}");
    }

    let ring = QuotientRing::new(gb).unwrap();
    let stairs: Vec<String> = ring.staircase().iter().map(|m| m.to_string()).collect();
    println!("staircase ({}): {}", ring.dim(), stairs.join(", "));

    let x = parse_polynomial("x").unwrap();
    println!("multiplication by x:");
    for row in ring.mult_matrix(&x).to_strings() {
        println!("  [{}]", row.join(", "));
    }
    let h = parse_polynomial("x^5 + x*y + 3").unwrap();
    println!("normal form of {h}: {}", ring.normal_form(&h));
}
