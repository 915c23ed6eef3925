use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{GroebnerBasis, IdealError, MonomialOrder, QMatrix};
use crate::poly::{Monomial, Poly, WeightSystem};
use crate::rational::Rational;

/// A finite-dimensional quotient `Q[x, y]/I` with its standard-monomial
/// basis.
///
/// The staircase is sorted by ascending weighted degree, ties by descending
/// `x` exponent, and every coordinate vector in the crate refers to that
/// order.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    gb: GroebnerBasis,
    staircase: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl QuotientRing {
    pub fn new(gb: GroebnerBasis) -> Result<Self, IdealError> {
        let lms = gb.leading_monomials();
        // finite iff some pure power of x and some pure power of y lead
        let x_bound = lms.iter().filter(|m| m.y == 0).map(|m| m.x).min();
        let y_bound = lms.iter().filter(|m| m.x == 0).map(|m| m.y).min();
        let (Some(xb), Some(yb)) = (x_bound, y_bound) else {
            return Err(IdealError::InfiniteDimensional);
        };
        let mut staircase: Vec<Monomial> = (0..xb)
            .flat_map(|a| (0..yb).map(move |b| Monomial::new(a, b)))
            .filter(|m| !lms.iter().any(|lm| lm.divides(*m)))
            .collect();
        let w = gb.weights().clone();
        staircase.sort_by(|a, b| w.staircase_cmp(*a, *b));
        let index = staircase.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Ok(QuotientRing { gb, staircase, index })
    }

    /// Gröbner basis plus staircase of the ideal generated by `generators`.
    pub fn from_generators(generators: &[Poly], order: &MonomialOrder) -> Result<Self, IdealError> {
        QuotientRing::new(GroebnerBasis::new(generators, order)?)
    }

    pub fn with_cofactors(generators: &[Poly], order: &MonomialOrder) -> Result<Self, IdealError> {
        QuotientRing::new(GroebnerBasis::with_cofactors(generators, order)?)
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn weights(&self) -> &WeightSystem {
        self.gb.weights()
    }

    pub fn dim(&self) -> usize {
        self.staircase.len()
    }

    pub fn staircase(&self) -> &[Monomial] {
        &self.staircase
    }

    pub fn index_of(&self, m: Monomial) -> Option<usize> {
        self.index.get(&m).copied()
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.gb.normal_form(p)
    }

    /// Coordinates of the class of `p` in the staircase basis.
    pub fn coords(&self, p: &Poly) -> Vec<Rational> {
        let nf = self.normal_form(p);
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in nf.terms() {
            v[self.index[&m]] = c.clone();
        }
        v
    }

    pub fn poly_from_coords(&self, coords: &[Rational]) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in self.staircase.iter().zip(coords) {
            p.add_term(*m, c.clone());
        }
        p
    }

    /// Weighted degrees of the staircase monomials.
    pub fn degrees(&self) -> Vec<Rational> {
        self.staircase.iter().map(|m| self.weights().degree(*m)).collect()
    }

    /// Multiplication by `h`; column `j` holds the coordinates of
    /// `h * staircase[j]`.
    pub fn mult_matrix(&self, h: &Poly) -> QMatrix {
        let cols: Vec<Vec<Rational>> = self
            .staircase
            .iter()
            .map(|m| self.coords(&h.mul_term(&Rational::one(), *m)))
            .collect();
        QMatrix::from_columns(self.dim(), &cols)
    }

    /// Coordinates of a product of two classes given in coordinates.
    pub fn multiply_coords(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let pa = self.poly_from_coords(a);
        let pb = self.poly_from_coords(b);
        self.coords(&(&pa * &pb))
    }
}

/// `dim Q[x, y]/(generators)`.
pub fn quotient_dim(generators: &[Poly], order: &MonomialOrder) -> Result<usize, IdealError> {
    Ok(QuotientRing::from_generators(generators, order)?.dim())
}
