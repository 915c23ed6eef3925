use num_traits::{One, Zero};

use super::{homogeneous_jordan_chains, lambda_clamp, BrieskornElement, GaussManinError, JordanChainSet};
use crate::check::Check;
use crate::curve::CurveFunctionPair;
use crate::ideal::QMatrix;
use crate::rational::{format_rational, Rational};

/// Constant matrices of the connection `(A₀ + A_∞ τ^{-1}) dτ` in the tilde
/// basis.
///
/// Column convention: `∂_τ ω̃_β = Σ_α A₀[α][β] ω̃_α + τ^{-1} Σ_α A_∞[α][β] ω̃_α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionPair {
    pub basis_labels: Vec<(usize, usize)>,
    pub a0: QMatrix,
    pub ainf: QMatrix,
}

impl ConnectionPair {
    pub fn from_chains(chains: &JordanChainSet) -> Self {
        let labels = chains.labels();
        let mu = labels.len();
        let mut a0 = QMatrix::zeros(mu, mu);
        let mut idx = 0;
        for c in chains.chains() {
            for j in 0..c.len() {
                if j + 1 < c.len() {
                    a0[(idx + 1, idx)] = Rational::one();
                }
                idx += 1;
            }
        }
        let lambdas: Vec<Rational> = chains.nus().iter().map(|nu| -lambda_clamp(nu)).collect();
        ConnectionPair {
            basis_labels: labels,
            a0,
            ainf: QMatrix::diagonal(&lambdas),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    /// The right-hand side `∂_τ ω̃_β` as a combination of tilde elements.
    pub fn predicted_derivative(&self, tilde: &[BrieskornElement], beta: usize) -> BrieskornElement {
        let mut out = BrieskornElement::zero(self.dim());
        for (alpha, t) in tilde.iter().enumerate() {
            let a = &self.a0[(alpha, beta)];
            if !a.is_zero() {
                out = out.add(&t.scale(a));
            }
            let b = &self.ainf[(alpha, beta)];
            if !b.is_zero() {
                out = out.add(&t.scale(b).shift());
            }
        }
        out
    }
}

pub fn connection_matrices(pair: &CurveFunctionPair) -> Result<ConnectionPair, GaussManinError> {
    Ok(ConnectionPair::from_chains(&homogeneous_jordan_chains(pair)?))
}

/// `ω̃_i^j = ω_i^j + (ν_i^j − 1) τ^{-1} ω_i^{j−1}` when `ν_i^j > 1`, else
/// `ω_i^j`.
pub fn tilde_basis(chains: &JordanChainSet) -> Vec<BrieskornElement> {
    let mu = chains.dim();
    let one = Rational::one();
    let mut out = Vec::with_capacity(mu);
    let mut idx = 0;
    for c in chains.chains() {
        for (j, v) in c.vectors.iter().enumerate() {
            let mut el = BrieskornElement::basis(mu, idx);
            if v.nu > one && j > 0 {
                let prev = BrieskornElement::basis(mu, idx - 1).scale(&(&v.nu - &one)).shift();
                el = el.add(&prev);
            }
            out.push(el);
            idx += 1;
        }
    }
    out
}

/// `A_∞ = diag(−λ)`, `A₀` has `μ − μ₂` entries all equal to `1` and
/// `A₀^{1 + max N} = 0`.
pub fn connection_shape_check(chains: &JordanChainSet, conn: &ConnectionPair) -> Check {
    let mut failures = Vec::new();
    let expected: Vec<Rational> = chains.nus().iter().map(|nu| -lambda_clamp(nu)).collect();
    if !conn.ainf.is_diagonal() {
        failures.push("A_inf is not diagonal".to_string());
    }
    for (i, e) in expected.iter().enumerate() {
        if &conn.ainf[(i, i)] != e {
            failures.push(format!("A_inf[{i}][{i}] != {}", format_rational(e)));
        }
    }
    let mu = conn.dim();
    let mut ones = 0;
    for r in 0..mu {
        for c in 0..mu {
            let v = &conn.a0[(r, c)];
            if v.is_one() {
                ones += 1;
            } else if !v.is_zero() {
                failures.push(format!("A0[{r}][{c}] = {}", format_rational(v)));
            }
        }
    }
    let mu2 = chains.len();
    if ones != mu - mu2 {
        failures.push(format!("A0 has {ones} ones, expected {}", mu - mu2));
    }
    let m = chains.max_len() as u32;
    if !conn.a0.pow(m).is_zero() {
        failures.push(format!("A0^{m} != 0"));
    }
    let details = if failures.is_empty() {
        format!("A_inf = diag(-lambda), A0 has {ones} unit entries, A0^{m} = 0")
    } else {
        failures.join("; ")
    };
    Check::new("connection_shape", failures.is_empty(), details)
}
