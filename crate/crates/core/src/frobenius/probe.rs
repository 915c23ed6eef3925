use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FrobeniusError;
use crate::curve::CurveFunctionPair;
use crate::gaussmanin::JordanChainSet;
use crate::ideal::QuotientRing;
use crate::poly::{jacobian_det, Poly};
use crate::rational::{rat, Rational};
use crate::unipoly::UniPoly;

const ATTEMPTS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeStatus {
    Semisimple,
    Inconclusive,
    DimensionMismatch,
}

/// A separable element generating the fibre algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimplicityCertificate {
    pub element: Poly,
    pub minimal_polynomial: UniPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreProbeReport {
    pub t0: Rational,
    pub u: Vec<Rational>,
    /// `None` when the fibre algebra is infinite-dimensional.
    pub dim: Option<usize>,
    pub status: ProbeStatus,
    pub certificate: Option<SemisimplicityCertificate>,
    pub note: String,
}

impl FibreProbeReport {
    pub fn is_semisimple(&self) -> bool {
        self.status == ProbeStatus::Semisimple
    }
}

/// Minimal polynomial of the class `z` acting on `ring`, from the Krylov
/// sequence of `1`, eliminating one new vector at a time.
pub fn minimal_polynomial(ring: &QuotientRing, z: &Poly) -> UniPoly {
    let m = ring.mult_matrix(z);
    // echelon rows (pivot, vector, combination of Krylov vectors giving it)
    let mut rows: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
    let mut current = ring.coords(&Poly::one());
    for k in 0..=ring.dim() {
        let mut v = current.clone();
        let mut comb = vec![Rational::zero(); k + 1];
        comb[k] = Rational::one();
        for (pivot, row, rc) in &rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone();
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= b * &f;
                }
            }
            for (a, b) in comb.iter_mut().zip(rc) {
                if !b.is_zero() {
                    *a -= b * &f;
                }
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => return UniPoly::from_coeffs(comb).monic(),
            Some(pivot) => {
                let inv = v[pivot].recip();
                v.iter_mut().for_each(|c| *c *= &inv);
                comb.iter_mut().for_each(|c| *c *= &inv);
                rows.push((pivot, v, comb));
            }
        }
        current = m.mul_vec(&current);
    }
    unreachable!("a relation appears within dim + 1 Krylov vectors")
}

/// Seeded small parameters, nonzero only on representatives of degree below
/// `deg f = 1`. The leading form of `F` stays `f`, so no critical points come
/// in from infinity and the fibre algebra keeps dimension `μ`.
pub fn random_small_u(chains: &JordanChainSet, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = Rational::from_integer(1.into());
    chains
        .vectors()
        .map(|v| {
            let r: i64 = rng.random_range(-2..=2);
            if v.degree < one {
                rat(r)
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// Checks that `O/(g − t0, J_F)` for `F = f + Σ u_i h_i` has dimension `μ`
/// and is semisimple.
pub fn fibre_semisimplicity_probe(
    pair: &CurveFunctionPair,
    chains: &JordanChainSet,
    t0: &Rational,
    u: &[Rational],
    seed: u64,
) -> Result<FibreProbeReport, FrobeniusError> {
    if t0.is_zero() {
        return Err(FrobeniusError::ZeroFibre);
    }
    if u.len() != chains.dim() {
        return Err(FrobeniusError::ParameterLength {
            expected: chains.dim(),
            got: u.len(),
        });
    }
    let mut big_f = pair.f().clone();
    for (ui, v) in u.iter().zip(chains.vectors()) {
        if !ui.is_zero() {
            big_f = &big_f + &v.representative.scale(ui);
        }
    }
    let fibre = pair.g() - &Poly::constant(t0.clone());
    let jf = jacobian_det(&big_f, pair.g());
    let mut report = FibreProbeReport {
        t0: t0.clone(),
        u: u.to_vec(),
        dim: None,
        status: ProbeStatus::DimensionMismatch,
        certificate: None,
        note: String::new(),
    };
    let ring = match pair.quotient(&[fibre, jf]) {
        Ok(r) => r,
        Err(_) => {
            report.note = "fibre algebra is infinite-dimensional".to_string();
            return Ok(report);
        }
    };
    report.dim = Some(ring.dim());
    if ring.dim() != pair.mu() {
        report.note = format!("dim {} != mu {}", ring.dim(), pair.mu());
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..ATTEMPTS {
        // a generic linear form separates the points of a reduced fibre
        let a: i64 = rng.random_range(1..=5);
        let b: i64 = rng.random_range(-5..=5);
        let z = &Poly::x().scale(&rat(a)) + &Poly::y().scale(&rat(b));
        let p = minimal_polynomial(&ring, &z);
        if p.degree() == Some(ring.dim()) && p.is_squarefree() {
            report.status = ProbeStatus::Semisimple;
            report.note = format!("separable generator found on attempt {}", attempt + 1);
            report.certificate = Some(SemisimplicityCertificate {
                element: z,
                minimal_polynomial: p,
            });
            return Ok(report);
        }
    }
    report.status = ProbeStatus::Inconclusive;
    report.note = format!("no separable generator in {ATTEMPTS} attempts");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussmanin::homogeneous_jordan_chains;
    use crate::gaussmanin::test_pairs::*;
    use crate::poly::parse_polynomial as p;

    #[test]
    fn a2_fibre() {
        let pair = ak(2);
        let chains = homogeneous_jordan_chains(&pair).unwrap();
        let r = fibre_semisimplicity_probe(&pair, &chains, &rat(1), &[rat(0), rat(0)], 0).unwrap();
        assert!(r.is_semisimple());
        assert_eq!(r.dim, Some(2));
        let ring = pair
            .quotient(&[p("x^2 + y^2 - 1").unwrap(), p("2*y").unwrap()])
            .unwrap();
        assert_eq!(
            minimal_polynomial(&ring, &p("x").unwrap()),
            UniPoly::from_coeffs(vec![rat(-1), rat(0), rat(1)])
        );
    }

    #[test]
    fn node_fibre() {
        let pair = node();
        let chains = homogeneous_jordan_chains(&pair).unwrap();
        let r = fibre_semisimplicity_probe(&pair, &chains, &rat(1), &[rat(0), rat(0)], 3).unwrap();
        assert!(r.is_semisimple());
    }

    #[test]
    fn families_at_t_one() {
        for pair in (2..=6)
            .map(ak)
            .chain([mirror(1, 2), mirror(2, 3), mirror(3, 4), mirror(4, 4)])
        {
            let chains = homogeneous_jordan_chains(&pair).unwrap();
            let zero = vec![Rational::zero(); pair.mu()];
            let r = fibre_semisimplicity_probe(&pair, &chains, &rat(1), &zero, 0).unwrap();
            assert!(r.is_semisimple(), "{r:?}");
        }
    }

    #[test]
    fn random_u_keeps_dimension() {
        for pair in [ak(3), ak(5), node(), mirror(2, 3), general(3, 2)] {
            let chains = homogeneous_jordan_chains(&pair).unwrap();
            for seed in 0..4 {
                let u = random_small_u(&chains, seed);
                let r = fibre_semisimplicity_probe(&pair, &chains, &rat(2), &u, seed).unwrap();
                assert_eq!(r.dim, Some(pair.mu()), "{r:?}");
            }
        }
    }

    #[test]
    fn origin_is_rejected() {
        let pair = ak(3);
        let chains = homogeneous_jordan_chains(&pair).unwrap();
        assert_eq!(
            fibre_semisimplicity_probe(&pair, &chains, &rat(0), &vec![rat(0); 3], 0),
            Err(FrobeniusError::ZeroFibre)
        );
    }
}
