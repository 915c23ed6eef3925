use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::FrobeniusError;
use crate::check::Check;
use crate::curve::CurveFunctionPair;
use crate::ideal::{QMatrix, QuotientRing};
use crate::poly::{jacobian_det, Monomial, Poly};
use crate::rational::{format_rational, Rational};

/// Terms of a polynomial in `x, y, u, v`, keyed by the `(x, y)` and `(u, v)`
/// exponents.
type Poly4 = BTreeMap<(Monomial, Monomial), Rational>;

/// Grothendieck residue of `O/(g, J)` on the staircase monomials.
///
/// Orientation: Bezoutian rows `(g, J)`, differencing `x` against `u` first,
/// then `y` against `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueFunctional {
    pub staircase: Vec<Monomial>,
    pub values: Vec<Rational>,
    /// `Δ ≡ Σ B_ij e_i(x) e_j(u)` modulo the ideal in both variable sets.
    pub bezoutian: QMatrix,
    /// `f_i = Σ_j B_ij e_j`, dual to the staircase under the residue pairing.
    pub dual_basis: Vec<Poly>,
}

impl ResidueFunctional {
    /// `Res(p)` through the normal form of `p`.
    pub fn residue(&self, ring: &QuotientRing, p: &Poly) -> Rational {
        ring.coords(p)
            .iter()
            .zip(&self.values)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Gram matrix `Res(e_i e_j)` of the staircase.
    pub fn gram(&self, ring: &QuotientRing) -> QMatrix {
        let n = self.staircase.len();
        let mut g = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = self.residue(ring, &Poly::monomial(self.staircase[i].mul(self.staircase[j])));
            }
        }
        g
    }
}

/// `(p(x, y) − p(u, y))/(x − u)` and `(p(u, y) − p(u, v))/(y − v)`.
fn difference_quotients(p: &Poly) -> (Poly4, Poly4) {
    let mut first = Poly4::new();
    let mut second = Poly4::new();
    for (m, c) in p.terms() {
        for i in 0..m.x {
            let key = (Monomial::new(i, m.y), Monomial::new(m.x - 1 - i, 0));
            *first.entry(key).or_insert_with(Rational::zero) += c;
        }
        for j in 0..m.y {
            let key = (Monomial::new(0, j), Monomial::new(m.x, m.y - 1 - j));
            *second.entry(key).or_insert_with(Rational::zero) += c;
        }
    }
    (first, second)
}

fn mul4(a: &Poly4, b: &Poly4) -> Poly4 {
    let mut out = Poly4::new();
    for ((ax, au), ca) in a {
        for ((bx, bu), cb) in b {
            *out.entry((ax.mul(*bx), au.mul(*bu))).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out
}

fn bezoutian(g: &Poly, j: &Poly) -> Poly4 {
    let (g1, g2) = difference_quotients(g);
    let (j1, j2) = difference_quotients(j);
    let mut det = mul4(&g1, &j2);
    for (k, c) in mul4(&g2, &j1) {
        *det.entry(k).or_insert_with(Rational::zero) -= c;
    }
    det.retain(|_, c| !c.is_zero());
    det
}

pub fn bezoutian_dual_basis(pair: &CurveFunctionPair) -> Result<ResidueFunctional, FrobeniusError> {
    let ring = pair.milnor_ring();
    let n = ring.dim();
    let delta = bezoutian(pair.g(), pair.jacobian());

    let mut cache: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
    let mut coords = |m: Monomial| -> Vec<Rational> {
        cache
            .entry(m)
            .or_insert_with(|| ring.coords(&Poly::monomial(m)))
            .clone()
    };
    let mut b = QMatrix::zeros(n, n);
    for ((mx, mu), c) in &delta {
        let cx = coords(*mx);
        let cu = coords(*mu);
        for (i, a) in cx.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, d) in cu.iter().enumerate().filter(|(_, d)| !d.is_zero()) {
                b[(i, j)] += c * a * d;
            }
        }
    }
    // Res(e_k f_i) = δ_ki with f_i = Σ_j B_ij e_j forces Gram = (Bᵀ)^{-1}
    let gram = b.transpose().inverse().ok_or(FrobeniusError::DegenerateBezoutian)?;
    let one = ring.index_of(Monomial::ONE).expect("1 is a standard monomial");
    let values = gram.row(one).to_vec();
    let dual_basis = (0..n).map(|i| ring.poly_from_coords(b.row(i))).collect();
    Ok(ResidueFunctional {
        staircase: ring.staircase().to_vec(),
        values,
        bezoutian: b,
        dual_basis,
    })
}

/// `Res(e_i f_j) = δ_ij`, evaluated through normal forms.
pub fn dual_basis_check(pair: &CurveFunctionPair, res: &ResidueFunctional) -> Check {
    let ring = pair.milnor_ring();
    let mut bad = Vec::new();
    for (i, e) in res.staircase.iter().enumerate() {
        for (j, f) in res.dual_basis.iter().enumerate() {
            let v = res.residue(ring, &f.mul_term(&Rational::one(), *e));
            let expected = if i == j { Rational::one() } else { Rational::zero() };
            if v != expected {
                bad.push(format!("Res(e_{i} f_{j}) = {}", format_rational(&v)));
            }
        }
    }
    let n = res.staircase.len();
    let details = if bad.is_empty() {
        format!("{n}x{n} pairing with dual basis is the identity")
    } else {
        bad.join("; ")
    };
    Check::new("residue_dual_basis", bad.is_empty(), details)
}

/// `Res(Jac(g, J)) = μ`.
pub fn euler_jacobi_check(pair: &CurveFunctionPair, res: &ResidueFunctional) -> Check {
    let v = res.residue(pair.milnor_ring(), &jacobian_det(pair.g(), pair.jacobian()));
    let mu = Rational::from_integer(pair.mu().into());
    Check::new(
        "residue_euler_jacobi",
        v == mu,
        format!("Res(Jac(g, J)) = {}, mu = {}", format_rational(&v), pair.mu()),
    )
}

/// The residue vanishes off the socle degree, which carries exactly one
/// staircase monomial with nonzero residue.
pub fn socle_degree_check(pair: &CurveFunctionPair, res: &ResidueFunctional) -> Check {
    let socle = pair.socle_degree();
    let w = pair.weights();
    let mut bad = Vec::new();
    let mut at_socle = Vec::new();
    for (m, v) in res.staircase.iter().zip(&res.values) {
        if w.degree(*m) == socle {
            at_socle.push((*m, v.clone()));
        } else if !v.is_zero() {
            bad.push(format!("Res({m}) = {} off the socle degree", format_rational(v)));
        }
    }
    if at_socle.len() != 1 || at_socle.iter().any(|(_, v)| v.is_zero()) {
        bad.push(format!(
            "{} staircase monomials at socle degree {}",
            at_socle.len(),
            format_rational(&socle)
        ));
    }
    let details = if bad.is_empty() {
        let (m, v) = &at_socle[0];
        format!(
            "socle degree {}, Res({m}) = {}",
            format_rational(&socle),
            format_rational(v)
        )
    } else {
        bad.join("; ")
    };
    Check::new("residue_socle_degree", bad.is_empty(), details)
}

/// The unique staircase monomial of socle degree and its residue.
pub fn socle_monomial(pair: &CurveFunctionPair, res: &ResidueFunctional) -> Option<(Monomial, Rational)> {
    let socle = pair.socle_degree();
    let mut it = res
        .staircase
        .iter()
        .zip(&res.values)
        .filter(|(m, _)| pair.weights().degree(**m) == socle);
    match (it.next(), it.next()) {
        (Some((m, v)), None) if !v.is_zero() => Some((*m, v.clone())),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussmanin::test_pairs::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn ak_residues() {
        for k in 2..9 {
            let pair = ak(k);
            let res = bezoutian_dual_basis(&pair).unwrap();
            let mut expected = vec![rat(0); k as usize];
            expected[k as usize - 1] = ratio(1, 2);
            assert_eq!(res.values, expected, "k = {k}");
        }
    }

    #[test]
    fn ak_bezoutian_by_hand() {
        // Δ = 2·Σ x^i u^(k−1−i) for g = x^k + y^2, J = 2y
        let pair = ak(4);
        let delta = bezoutian(pair.g(), pair.jacobian());
        let expected: Poly4 = (0..4u32)
            .map(|i| ((Monomial::new(i, 0), Monomial::new(3 - i, 0)), rat(2)))
            .collect();
        assert_eq!(delta, expected);
    }

    #[test]
    fn node_residues() {
        let pair = node();
        let res = bezoutian_dual_basis(&pair).unwrap();
        assert_eq!(res.values, vec![rat(0), rat(-1)]);
        let delta = bezoutian(pair.g(), pair.jacobian());
        let expected: Poly4 = [
            ((Monomial::new(0, 1), Monomial::ONE), rat(-1)),
            ((Monomial::ONE, Monomial::new(1, 0)), rat(-1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(delta, expected);
    }

    #[test]
    fn checks_pass() {
        for pair in [
            ak(2),
            ak(5),
            node(),
            mirror(2, 3),
            mirror(3, 4),
            general(3, 2),
            general(4, 3),
        ] {
            let res = bezoutian_dual_basis(&pair).unwrap();
            for c in [
                dual_basis_check(&pair, &res),
                euler_jacobi_check(&pair, &res),
                socle_degree_check(&pair, &res),
            ] {
                assert!(c.pass, "{}: {}", c.name, c.details);
            }
            assert!(res.gram(pair.milnor_ring()).inverse().is_some());
        }
    }

    #[test]
    fn euler_jacobi_values() {
        let pair = ak(2);
        let res = bezoutian_dual_basis(&pair).unwrap();
        assert_eq!(
            res.residue(pair.milnor_ring(), &crate::poly::parse_polynomial("4*x").unwrap()),
            rat(2)
        );
        let pair = node();
        let res = bezoutian_dual_basis(&pair).unwrap();
        assert_eq!(
            res.residue(pair.milnor_ring(), &crate::poly::parse_polynomial("-2*y").unwrap()),
            rat(2)
        );
    }

    #[test]
    fn tampered_residue_fails() {
        let pair = ak(3);
        let mut res = bezoutian_dual_basis(&pair).unwrap();
        res.values[0] = rat(1);
        assert!(!socle_degree_check(&pair, &res).pass);
        assert!(!dual_basis_check(&pair, &res).pass);
    }
}
