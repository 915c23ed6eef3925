use std::collections::BTreeMap;

use num_traits::Zero;

use super::{homogeneous_jordan_chains, tilde_basis, ConnectionPair, GaussManinError, JordanChainSet};
use crate::check::Check;
use crate::curve::CurveFunctionPair;
use crate::ideal::QMatrix;
use crate::poly::{jacobian_det, Poly};
use crate::rational::{format_rational, Rational};
use crate::unipoly::UniPoly;

/// `Σ_k τ^{-k} Σ_i c_{k,i} ω_i` with constant coefficients over the chain
/// basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrieskornElement {
    dim: usize,
    levels: BTreeMap<usize, Vec<Rational>>,
}

impl BrieskornElement {
    pub fn zero(dim: usize) -> Self {
        BrieskornElement {
            dim,
            levels: BTreeMap::new(),
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = vec![Rational::zero(); dim];
        v[i] = Rational::from_integer(1.into());
        BrieskornElement::from_level(0, v)
    }

    pub fn from_level(k: usize, coeffs: Vec<Rational>) -> Self {
        let mut el = BrieskornElement::zero(coeffs.len());
        el.levels.insert(k, coeffs);
        el.normalized()
    }

    pub fn from_levels(dim: usize, levels: BTreeMap<usize, Vec<Rational>>) -> Self {
        BrieskornElement { dim, levels }.normalized()
    }

    fn normalized(mut self) -> Self {
        self.levels.retain(|_, v| v.iter().any(|c| !c.is_zero()));
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn levels(&self) -> &BTreeMap<usize, Vec<Rational>> {
        &self.levels
    }

    pub fn level(&self, k: usize) -> Vec<Rational> {
        self.levels
            .get(&k)
            .cloned()
            .unwrap_or_else(|| vec![Rational::zero(); self.dim])
    }

    pub fn is_zero(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn add(&self, other: &BrieskornElement) -> BrieskornElement {
        let mut levels = self.levels.clone();
        for (k, v) in &other.levels {
            let slot = levels.entry(*k).or_insert_with(|| vec![Rational::zero(); self.dim]);
            for (a, b) in slot.iter_mut().zip(v) {
                *a += b;
            }
        }
        BrieskornElement::from_levels(self.dim, levels)
    }

    pub fn scale(&self, s: &Rational) -> BrieskornElement {
        let levels = self
            .levels
            .iter()
            .map(|(k, v)| (*k, v.iter().map(|c| c * s).collect()))
            .collect();
        BrieskornElement::from_levels(self.dim, levels)
    }

    /// Multiplication by `τ^{-1}`.
    pub fn shift(&self) -> BrieskornElement {
        BrieskornElement {
            dim: self.dim,
            levels: self.levels.iter().map(|(k, v)| (k + 1, v.clone())).collect(),
        }
    }

    pub fn to_strings(&self) -> BTreeMap<usize, Vec<String>> {
        self.levels
            .iter()
            .map(|(k, v)| (*k, v.iter().map(format_rational).collect()))
            .collect()
    }
}

/// Like [`BrieskornElement`] but with coefficients in `Q[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TElement {
    pub levels: BTreeMap<usize, Vec<UniPoly>>,
    dim: usize,
}

impl TElement {
    pub fn at(&self, t: &Rational) -> BrieskornElement {
        let levels = self
            .levels
            .iter()
            .map(|(k, v)| (*k, v.iter().map(|c| c.eval(t)).collect()))
            .collect();
        BrieskornElement::from_levels(self.dim, levels)
    }

    pub fn at_origin(&self) -> BrieskornElement {
        self.at(&Rational::zero())
    }
}

/// `h = Σ c_i(g)·h_i + q·J` with `h_i` the chain representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub coeffs: Vec<UniPoly>,
    pub q: Poly,
}

/// Reduction of forms `h·α` on the central fibre to the chain basis.
#[derive(Debug, Clone)]
pub struct BrieskornLattice<'a> {
    pair: &'a CurveFunctionPair,
    chains: JordanChainSet,
    reps: Vec<Poly>,
    to_chain: QMatrix,
    e_int: u64,
    j_int: u64,
    derivatives: Vec<BrieskornElement>,
}

impl<'a> BrieskornLattice<'a> {
    pub fn new(pair: &'a CurveFunctionPair) -> Result<Self, GaussManinError> {
        BrieskornLattice::from_chains(pair, homogeneous_jordan_chains(pair)?)
    }

    pub fn from_chains(pair: &'a CurveFunctionPair, chains: JordanChainSet) -> Result<Self, GaussManinError> {
        let to_chain = chains
            .basis_matrix()
            .inverse()
            .ok_or(GaussManinError::SingularChainBasis)?;
        let w = pair.weights();
        let int_deg = |p: &Poly| p.monomials().next().map(|m| w.int_degree(m)).expect("nonzero");
        let mut lattice = BrieskornLattice {
            pair,
            reps: chains.representatives(),
            chains,
            to_chain,
            e_int: int_deg(pair.g()),
            j_int: int_deg(pair.jacobian()),
            derivatives: Vec::new(),
        };
        let minus_f = -pair.f();
        let derivatives = (0..lattice.reps.len())
            .map(|i| lattice.reduce(&(&minus_f * &lattice.reps[i])).map(|e| e.at_origin()))
            .collect::<Result<Vec<_>, _>>()?;
        lattice.derivatives = derivatives;
        Ok(lattice)
    }

    pub fn chains(&self) -> &JordanChainSet {
        &self.chains
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of a class of `O/(g, J)` over the chain basis.
    pub fn chain_coords(&self, h: &Poly) -> Vec<Rational> {
        self.to_chain.mul_vec(&self.pair.milnor_ring().coords(h))
    }

    pub fn decompose(&self, h: &Poly) -> Result<Decomposition, GaussManinError> {
        let mu = self.dim();
        let mut coeffs = vec![UniPoly::zero(); mu];
        let mut q = Poly::zero();
        let gb = self.pair.milnor_ring().gb();
        for (d, hc) in h.homogeneous_components(self.pair.weights()) {
            let a = self.chain_coords(&hc);
            let mut r = hc;
            for (ai, rep) in a.iter().zip(&self.reps) {
                if !ai.is_zero() {
                    r = &r - &rep.scale(ai);
                }
            }
            for (c, ai) in coeffs.iter_mut().zip(&a) {
                *c = &*c + &UniPoly::constant(ai.clone());
            }
            if r.is_zero() {
                continue;
            }
            let lifted = gb.lift(&r)?;
            let w = self.pair.weights();
            let a_part = d
                .checked_sub(self.e_int)
                .and_then(|dd| lifted[0].homogeneous_components(w).remove(&dd))
                .unwrap_or_default();
            let b_part = d
                .checked_sub(self.j_int)
                .and_then(|dd| lifted[1].homogeneous_components(w).remove(&dd))
                .unwrap_or_default();
            q = &q + &b_part;
            if !a_part.is_zero() {
                let inner = self.decompose(&a_part)?;
                for (c, ci) in coeffs.iter_mut().zip(&inner.coeffs) {
                    *c = &*c + &ci.shift();
                }
                q = &q + &(self.pair.g() * &inner.q);
            }
        }
        Ok(Decomposition { coeffs, q })
    }

    /// The class `[h·α]` as `Σ_k τ^{-k} Σ_i c_{k,i}(t) ω_i`, replacing
    /// `q·df` by `τ^{-1}·dq` at each step.
    pub fn reduce(&self, h: &Poly) -> Result<TElement, GaussManinError> {
        let mut levels = BTreeMap::new();
        let mut current = h.clone();
        let mut k = 0;
        loop {
            let d = self.decompose(&current)?;
            if d.coeffs.iter().any(|c| !c.is_zero()) {
                levels.insert(k, d.coeffs);
            }
            if d.q.is_zero() {
                break;
            }
            current = jacobian_det(&d.q, self.pair.g());
            k += 1;
        }
        Ok(TElement {
            levels,
            dim: self.dim(),
        })
    }

    pub fn reduce_at_origin(&self, h: &Poly) -> Result<BrieskornElement, GaussManinError> {
        Ok(self.reduce(h)?.at_origin())
    }

    /// `∂_τ` on the central fibre, using `∂_τ ω_i = [−f h_i α]`.
    pub fn d_tau(&self, el: &BrieskornElement) -> BrieskornElement {
        let mut out = BrieskornElement::zero(self.dim());
        for (k, v) in el.levels() {
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut term = self.derivatives[i].scale(c);
                for _ in 0..*k {
                    term = term.shift();
                }
                out = out.add(&term);
                if *k > 0 {
                    let k_rat = Rational::from_integer((*k as i64).into());
                    let mut down = BrieskornElement::basis(self.dim(), i).scale(&(-(c * k_rat)));
                    for _ in 0..=*k {
                        down = down.shift();
                    }
                    out = out.add(&down);
                }
            }
        }
        out
    }
}

/// Compares `∂_τ ω̃` computed by reduction of `−f·ω̃` with the prediction from
/// the constant matrices `A₀`, `A_∞`.
pub fn connection_consistency_check(lattice: &BrieskornLattice<'_>, conn: &ConnectionPair) -> Check {
    let tilde = tilde_basis(lattice.chains());
    let mut failures = Vec::new();
    for (beta, t) in tilde.iter().enumerate() {
        let by_reduction = lattice.d_tau(t);
        let predicted = conn.predicted_derivative(&tilde, beta);
        if by_reduction != predicted {
            let (i, j) = conn.basis_labels[beta];
            failures.push(format!(
                "({i},{j}): reduction {:?} vs matrices {:?}",
                by_reduction.to_strings(),
                predicted.to_strings()
            ));
        }
    }
    let details = if failures.is_empty() {
        format!("d_tau of all {} tilde elements agrees with A0 + A_inf/tau", tilde.len())
    } else {
        failures.join("; ")
    };
    Check::new("connection_dual_route", failures.is_empty(), details)
}
