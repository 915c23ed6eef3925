//! Milnor numbers and the kernel identity for a few curve-function pairs.

use curvefrob::curve::{kernel_identity, milnor_numbers};
use curvefrob::rational::ratio;
use curvefrob::{parse_polynomial, CurveFunctionPair, WeightSystem};

fn main() {
    let cases = [
        ("x", "x^3 + y^2", ratio(1, 1), ratio(3, 2)),
        ("x + y", "x*y", ratio(1, 1), ratio(1, 1)),
        ("x^2 + y^3", "x*y", ratio(1, 2), ratio(1, 3)),
        ("x*y", "x^3 + y^4", ratio(4, 7), ratio(3, 7)),
        ("y", "x^2*y + y^3", ratio(1, 1), ratio(1, 1)),
    ];
    println!(
        "{:<12} {:<14} {:>3} {:>4} {:>4}  kernel identity",
        "f", "g", "mu", "mu1", "mu2"
    );
    for (f, g, wx, wy) in cases {
        let pair = CurveFunctionPair::validate(
            parse_polynomial(f).unwrap(),
            parse_polynomial(g).unwrap(),
            WeightSystem::new(wx, wy).unwrap(),
        );
        let pair = match pair {
            Ok(p) => p,
            Err(e) => {
                println!("{f:<12} {g:<14} rejected: {} ({e})", e.code());
                continue;
            }
        };
        let m = milnor_numbers(&pair).unwrap();
        let k = kernel_identity(&pair).unwrap();
        println!(
            "{f:<12} {g:<14} {:>3} {:>4} {:>4}  ker {} / image {} / coker {}",
            m.mu, m.mu1, m.mu2, k.kernel, k.curve_jacobian_image, k.cokernel
        );
    }
}
