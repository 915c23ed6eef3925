//! Algebraic invariants checked on random inputs.

mod common;

use curvefrob::poly::{jacobian_det, Var};
use curvefrob::rational::ratio;
use curvefrob::{parse_polynomial, MonomialOrder, Poly, QuotientRing, WeightSystem};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = curvefrob::Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..=3, 0u32..=3), small_rational()), 0..6)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|((i, j), c)| (c, i, j))))
}

/// `O/(x^3 + y^2, 2y)` and `O/(x*y, x - y)`: the A_3 and node Milnor rings.
fn rings() -> Vec<QuotientRing> {
    [common::ak(3), common::node(), common::mirror(2, 3)]
        .iter()
        .map(|p| p.milnor_ring().clone())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn jacobian_is_antisymmetric_and_leibniz(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(jacobian_det(&a, &b), -jacobian_det(&b, &a));
        prop_assert_eq!(jacobian_det(&a, &a), Poly::zero());
        prop_assert_eq!(
            jacobian_det(&(&a * &b), &c),
            &(&a * &jacobian_det(&b, &c)) + &(&b * &jacobian_det(&a, &c))
        );
    }

    #[test]
    fn derivative_product_rule(a in poly(), b in poly()) {
        for v in [Var::X, Var::Y] {
            prop_assert_eq!((&a * &b).derivative(v), &(&a.derivative(v) * &b) + &(&a * &b.derivative(v)));
        }
    }

    #[test]
    fn printing_parses_back(a in poly()) {
        prop_assert_eq!(parse_polynomial(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(a in poly(), b in poly(), s in small_rational()) {
        for ring in rings() {
            let na = ring.normal_form(&a);
            prop_assert_eq!(ring.normal_form(&na), na.clone());
            prop_assert!(na.monomials().all(|m| ring.index_of(m).is_some()));
            let combo = &a + &b.scale(&s);
            prop_assert_eq!(ring.normal_form(&combo), &na + &ring.normal_form(&b).scale(&s));
            prop_assert_eq!(ring.poly_from_coords(&ring.coords(&a)), na);
        }
    }

    #[test]
    fn multiplication_matrices_compose(a in poly(), b in poly()) {
        for ring in rings() {
            prop_assert_eq!(ring.mult_matrix(&(&a * &b)), &ring.mult_matrix(&a) * &ring.mult_matrix(&b));
            prop_assert_eq!(ring.coords(&(&a * &b)), ring.mult_matrix(&a).mul_vec(&ring.coords(&b)));
        }
    }

    #[test]
    fn homogeneous_components_sum_back(a in poly(), px in 1i64..=4, py in 1i64..=4) {
        let w = WeightSystem::from_ints(px, py).unwrap();
        let parts = a.homogeneous_components(&w);
        let mut sum = Poly::zero();
        for p in parts.values() {
            prop_assert!(p.is_homogeneous(&w));
            sum += p;
        }
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn product_of_homogeneous_is_homogeneous(i in 0u32..4, j in 0u32..4, k in 0u32..4, c in small_rational()) {
        let w = WeightSystem::from_ints(2, 3).unwrap();
        // x^3 and y^2 share weighted degree 6
        let a = Poly::from_terms([(c.clone(), 3 * i, 0), (ratio(1, 1), 0, 2 * i)]);
        let b = Poly::from_terms([(ratio(1, 1), 3 * j + 3 * k, 0), (c, 3 * j, 2 * k)]);
        let ab = &a * &b;
        prop_assert!(ab.is_zero() || ab.is_homogeneous(&w));
    }
}

#[test]
fn lift_reconstructs_members() {
    let order = MonomialOrder::new(WeightSystem::from_ints(2, 3).unwrap());
    let gens = [parse_polynomial("x^3 + y^2").unwrap(), parse_polynomial("y").unwrap()];
    let ring = QuotientRing::with_cofactors(&gens, &order).unwrap();
    let member = parse_polynomial("x^5*y + 2*x^3 + 2*y^2 + y^3").unwrap();
    let cof = ring.gb().lift(&member).unwrap();
    let back = cof.iter().zip(&gens).fold(Poly::zero(), |acc, (c, g)| &acc + &(c * g));
    assert_eq!(back, member);
}
