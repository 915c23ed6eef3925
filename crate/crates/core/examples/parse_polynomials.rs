//! Parse polynomials, print weighted degrees and Jacobians.
//!
//! `cargo run --example parse_polynomials -- "x^4 + y^2" 1 2`

use curvefrob::poly::{jacobian_det, Var};
use curvefrob::rational::parse_rational;
use curvefrob::{parse_polynomial, WeightSystem};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let text = args.first().map_or("(x - y)*(x + y)", String::as_str);
    let wx = parse_rational(args.get(1).map_or("1", String::as_str)).expect("weight of x");
    let wy = parse_rational(args.get(2).map_or("1", String::as_str)).expect("weight of y");
    let w = WeightSystem::new(wx, wy).expect("positive weights");

    let p = match parse_polynomial(text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{text}: {e}");
            std::process::exit(3);
        }
    };
    println!("p          = {p}");
    println!("dp/dx      = {}", p.derivative(Var::X));
    println!("dp/dy      = {}", p.derivative(Var::Y));
    match p.weighted_degree(&w).ok().and_then(|g| g.degree().cloned()) {
        Some(d) => println!("degree     = {d}"),
        None => println!("degree     = (not homogeneous)"),
    }
    for (d, part) in p.homogeneous_components(&w) {
        println!("  part {d:>3}: {part}");
    }
    println!("Jac(x, p)  = {}", jacobian_det(&parse_polynomial("x").unwrap(), &p));
}
