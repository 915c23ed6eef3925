use num_traits::{One, Zero};

use super::{bezoutian_dual_basis, socle_monomial, FrobeniusError, ResidueFunctional};
use crate::check::Check;
use crate::curve::CurveFunctionPair;
use crate::gaussmanin::{lambda_clamp, ConnectionPair, JordanChainSet};
use crate::ideal::QMatrix;
use crate::poly::{Monomial, Poly};
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// Chain representatives `(−f)^j h_i`, in chain order.
    Chain,
    /// Staircase monomials of `O/(g, J)`.
    Monomial,
}

/// The Jacobian algebra with its residue metric in a chosen basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusData {
    pub kind: BasisKind,
    pub basis: Vec<Poly>,
    pub nus: Vec<Rational>,
    pub metric_raw: QMatrix,
    pub metric_normalized: QMatrix,
    /// Residue of the socle monomial, used for the normalisation.
    pub socle_residue: Rational,
    pub socle: Monomial,
    /// `structure_constants[a][b][c]`: coefficient of `h_c` in `h_a h_b`.
    pub structure_constants: Vec<Vec<Vec<Rational>>>,
    pub unit_index: usize,
}

impl FrobeniusData {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of left multiplication by `h_a`.
    pub fn left_mult(&self, a: usize) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for b in 0..n {
            for c in 0..n {
                m[(c, b)] = self.structure_constants[a][b][c].clone();
            }
        }
        m
    }

    /// Coordinates of `h_a ⋆ h_b`.
    pub fn product(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let s = ai * bj;
                for (o, c) in out.iter_mut().zip(&self.structure_constants[i][j]) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    /// `⟨a, b⟩` for coordinate vectors, using the raw metric.
    pub fn pairing(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let gb = self.metric_raw.mul_vec(b);
        a.iter().zip(&gb).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
    }
}

fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Builds the structure constants and metric for homogeneous `basis`.
pub fn frobenius_data(
    pair: &CurveFunctionPair,
    res: &ResidueFunctional,
    kind: BasisKind,
    basis: Vec<Poly>,
) -> Result<FrobeniusData, FrobeniusError> {
    let ring = pair.milnor_ring();
    let n = basis.len();
    let cols: Vec<Vec<Rational>> = basis.iter().map(|h| ring.coords(h)).collect();
    let to_basis = QMatrix::from_columns(ring.dim(), &cols)
        .inverse()
        .ok_or(FrobeniusError::NotABasis)?;
    let (socle, socle_residue) = socle_monomial(pair, res).ok_or(FrobeniusError::Socle)?;

    let mut metric_raw = QMatrix::zeros(n, n);
    let mut structure_constants = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in 0..n {
            let prod = &basis[a] * &basis[b];
            metric_raw[(a, b)] = res.residue(ring, &prod);
            structure_constants[a][b] = to_basis.mul_vec(&ring.coords(&prod));
        }
    }
    let metric_normalized = metric_raw.scale(&socle_residue.recip());
    let one = to_basis.mul_vec(&ring.coords(&Poly::one()));
    let unit_index = (0..n)
        .find(|&i| one == unit_vector(n, i))
        .ok_or(FrobeniusError::NoUnit)?;
    let w = pair.weights();
    let nus = basis
        .iter()
        .map(|h| {
            let m = h.monomials().next().expect("basis elements are nonzero");
            pair.nu_of_degree(&w.degree(m))
        })
        .collect();
    Ok(FrobeniusData {
        kind,
        basis,
        nus,
        metric_raw,
        metric_normalized,
        socle_residue,
        socle,
        structure_constants,
        unit_index,
    })
}

pub fn chain_frobenius_data(
    pair: &CurveFunctionPair,
    chains: &JordanChainSet,
) -> Result<FrobeniusData, FrobeniusError> {
    let res = bezoutian_dual_basis(pair)?;
    frobenius_data(pair, &res, BasisKind::Chain, chains.representatives())
}

pub fn monomial_frobenius_data(pair: &CurveFunctionPair) -> Result<FrobeniusData, FrobeniusError> {
    let res = bezoutian_dual_basis(pair)?;
    let basis = pair
        .milnor_ring()
        .staircase()
        .iter()
        .map(|m| Poly::monomial(*m))
        .collect();
    frobenius_data(pair, &res, BasisKind::Monomial, basis)
}

fn check_from(name: &str, bad: Vec<String>, ok: String) -> Check {
    let pass = bad.is_empty();
    let details = if pass {
        ok
    } else {
        bad.into_iter().take(8).collect::<Vec<_>>().join("; ")
    };
    Check::new(name, pass, details)
}

/// Commutativity, associativity, unit, invariance, metric symmetry,
/// nondegeneracy and the pairing grading, each as its own check.
pub fn frobenius_axiom_check(data: &FrobeniusData) -> Vec<Check> {
    let n = data.dim();
    let c = &data.structure_constants;
    let basis: Vec<Vec<Rational>> = (0..n).map(|i| unit_vector(n, i)).collect();

    let mut comm = Vec::new();
    for a in 0..n {
        for b in 0..a {
            if c[a][b] != c[b][a] {
                comm.push(format!("C[{a}][{b}] != C[{b}][{a}]"));
            }
        }
    }

    let mut assoc = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let ab = &c[a][b];
            for cc in 0..n {
                let left = data.product(ab, &basis[cc]);
                let right = data.product(&basis[a], &c[b][cc]);
                if left != right {
                    assoc.push(format!("(h{a} h{b}) h{cc} != h{a} (h{b} h{cc})"));
                }
            }
        }
    }

    let u = data.unit_index;
    let mut unit = Vec::new();
    if data.left_mult(u) != QMatrix::identity(n) {
        unit.push(format!("basis element {u} does not act as the identity"));
    }

    let mut inv = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                let l = data.pairing(&c[a][b], &basis[cc]);
                let r = data.pairing(&basis[a], &c[b][cc]);
                if l != r {
                    inv.push(format!("<h{a} h{b}, h{cc}> != <h{a}, h{b} h{cc}>"));
                }
            }
        }
    }

    let sym = if data.metric_raw.is_symmetric() {
        Vec::new()
    } else {
        vec!["metric is not symmetric".to_string()]
    };
    let nondeg = if data.metric_raw.inverse().is_some() {
        Vec::new()
    } else {
        vec!["metric is degenerate".to_string()]
    };

    let one = Rational::one();
    let mut grading = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !data.metric_raw[(a, b)].is_zero() && &data.nus[a] + &data.nus[b] != one {
                grading.push(format!(
                    "<h{a}, h{b}> != 0 with nu sum {}",
                    format_rational(&(&data.nus[a] + &data.nus[b]))
                ));
            }
        }
    }

    vec![
        check_from("frobenius_commutativity", comm, format!("{n}x{n} table symmetric")),
        check_from(
            "frobenius_associativity",
            assoc,
            format!("{} triples associative", n * n * n),
        ),
        check_from("frobenius_unit", unit, format!("basis element {u} is the unit")),
        check_from(
            "frobenius_invariance",
            inv,
            "<a*b, c> = <a, b*c> on all triples".to_string(),
        ),
        check_from("metric_symmetry", sym, "metric symmetric".to_string()),
        check_from("metric_nondegenerate", nondeg, "metric invertible".to_string()),
        check_from("pairing_grading", grading, "nonzero pairings have nu sum 1".to_string()),
    ]
}

/// Nilpotency index of multiplication by each non-unit basis element, or
/// `None` when it is not nilpotent within `μ` steps.
pub fn nilpotency_indices(data: &FrobeniusData) -> Vec<(usize, Option<usize>)> {
    let n = data.dim();
    (0..n)
        .filter(|&a| a != data.unit_index)
        .map(|a| {
            let m = data.left_mult(a);
            let mut p = m.clone();
            let mut index = None;
            for k in 1..=n {
                if p.is_zero() {
                    index = Some(k);
                    break;
                }
                p = &p * &m;
            }
            (a, index)
        })
        .collect()
}

pub fn nilpotency_probe(data: &FrobeniusData) -> Check {
    let indices = nilpotency_indices(data);
    let bad: Vec<String> = indices
        .iter()
        .filter(|(_, i)| i.is_none())
        .map(|(a, _)| format!("h{a} is not nilpotent"))
        .collect();
    let ok = indices
        .iter()
        .map(|(a, i)| format!("h{a}:{}", i.unwrap_or(0)))
        .collect::<Vec<_>>()
        .join(" ");
    check_from("nilpotency", bad, format!("indices {ok}"))
}

/// The class of `α` is the unit chain element `1`, with `ν = p − e`, identity
/// period matrix, and eigenvalue `−λ` under `A_∞`.
pub fn primitivity_check(pair: &CurveFunctionPair, chains: &JordanChainSet, conn: &ConnectionPair) -> Check {
    let ring = pair.milnor_ring();
    let mut bad = Vec::new();
    let vectors: Vec<_> = chains.vectors().collect();
    let Some(unit) = vectors.iter().position(|v| v.representative == Poly::one()) else {
        return Check::fail("primitivity", "no chain element is the constant 1");
    };
    let nu = &vectors[unit].nu;
    if *nu != pair.p_total() - pair.e() {
        bad.push(format!("nu(1) = {}", format_rational(nu)));
    }
    // Kodaira-Spencer: ∂/∂u_i ↦ class of h_i, expressed back in the chain basis
    let to_chain = chains.basis_matrix().inverse();
    let period = to_chain.map(|inv| {
        let cols: Vec<Vec<Rational>> = vectors
            .iter()
            .map(|v| inv.mul_vec(&ring.coords(&v.representative)))
            .collect();
        QMatrix::from_columns(vectors.len(), &cols)
    });
    if period.as_ref() != Some(&QMatrix::identity(vectors.len())) {
        bad.push("period matrix is not the identity".to_string());
    }
    let eigen = -lambda_clamp(nu);
    let mut expected = vec![Rational::zero(); vectors.len()];
    expected[unit] = eigen.clone();
    if conn.ainf.column(unit) != expected {
        bad.push("alpha is not an eigenvector of A_inf".to_string());
    }
    check_from(
        "primitivity",
        bad,
        format!(
            "alpha = chain element {unit}, nu = {}, eigenvalue {}",
            format_rational(nu),
            format_rational(&eigen)
        ),
    )
}
