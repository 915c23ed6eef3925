//! Fibre algebras `O/(g − t0, J_F)` away from the origin: dimension and a
//! separable generator certifying semisimplicity.

use curvefrob::frobenius::{fibre_semisimplicity_probe, random_small_u};
use curvefrob::gaussmanin::homogeneous_jordan_chains;
use curvefrob::rational::{rat, ratio};
use curvefrob::{parse_polynomial, CurveFunctionPair, Rational, WeightSystem};

fn main() {
    let pair = CurveFunctionPair::validate(
        parse_polynomial("x^2 + y^3").unwrap(),
        parse_polynomial("x*y").unwrap(),
        WeightSystem::new(ratio(1, 2), ratio(1, 3)).unwrap(),
    )
    .unwrap();
    let chains = homogeneous_jordan_chains(&pair).unwrap();
    let zero = vec![Rational::default(); pair.mu()];
    for t0 in [rat(1), rat(-2), ratio(3, 7)] {
        for u in [zero.clone(), random_small_u(&chains, 5)] {
            let r = fibre_semisimplicity_probe(&pair, &chains, &t0, &u, 0).unwrap();
            let u: Vec<String> = u.iter().map(|c| c.to_string()).collect();
            print!("t0 = {t0:<4} u = [{}]  dim {:?}  {:?}", u.join(","), r.dim, r.status);
            if let Some(c) = r.certificate {
                print!("  z = {}, m(t) = {}", c.element, c.minimal_polynomial);
            }
            println!();
        }
    }
}
