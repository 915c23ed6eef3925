use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyError, WeightSystem};
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// Result of asking for the weighted degree of a nonzero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Grading {
    Homogeneous(Rational),
    Mixed,
}

impl Grading {
    pub fn degree(&self) -> Option<&Rational> {
        match self {
            Grading::Homogeneous(d) => Some(d),
            Grading::Mixed => None,
        }
    }
}

/// Sparse polynomial in `x` and `y` with rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is equality of
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::term(c, Monomial::ONE)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly::term(Rational::one(), m)
    }

    pub fn x() -> Self {
        Poly::monomial(Monomial::new(1, 0))
    }

    pub fn y() -> Self {
        Poly::monomial(Monomial::new(0, 1))
    }

    /// Builds a polynomial from `(coefficient, x exponent, y exponent)` triples.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, u32, u32)>,
    {
        let mut p = Poly::zero();
        for (c, a, b) in terms {
            p.add_term(Monomial::new(a, b), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.keys().copied()
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(Monomial::ONE)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn remove_term(&mut self, m: Monomial) -> Option<Rational> {
        self.terms.remove(&m)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// `self * c * m`.
    pub fn mul_term(&self, c: &Rational, m: Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    /// `self -= c * m * other`, in place.
    pub fn sub_scaled(&mut self, c: &Rational, m: Monomial, other: &Poly) {
        for (k, v) in &other.terms {
            self.add_term(k.mul(m), -(v * c));
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn try_pow(&self, e: i64) -> Result<Poly, PolyError> {
        let e = u32::try_from(e).map_err(|_| PolyError::NegativeExponent(e))?;
        Ok(self.pow(e))
    }

    pub fn derivative(&self, var: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, dm) = match var {
                Var::X if m.x > 0 => (m.x, Monomial::new(m.x - 1, m.y)),
                Var::Y if m.y > 0 => (m.y, Monomial::new(m.x, m.y - 1)),
                _ => continue,
            };
            out.add_term(dm, c * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn weighted_degree(&self, w: &WeightSystem) -> Result<Grading, PolyError> {
        let mut degrees = self.terms.keys().map(|m| w.int_degree(*m));
        let first = degrees.next().ok_or(PolyError::ZeroPolynomial)?;
        if degrees.all(|d| d == first) {
            let m = *self.terms.keys().next().expect("nonempty");
            Ok(Grading::Homogeneous(w.degree(m)))
        } else {
            Ok(Grading::Mixed)
        }
    }

    pub fn is_homogeneous(&self, w: &WeightSystem) -> bool {
        matches!(self.weighted_degree(w), Ok(Grading::Homogeneous(_)))
    }

    /// Splits into weighted-homogeneous pieces, keyed by integer degree.
    pub fn homogeneous_components(&self, w: &WeightSystem) -> BTreeMap<u64, Poly> {
        let mut out: BTreeMap<u64, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(w.int_degree(*m)).or_default().terms.insert(*m, c.clone());
        }
        out
    }

    /// Largest term for the weighted order of `w` (degree, then `x`).
    pub fn leading_term(&self, w: &WeightSystem) -> Option<(Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| w.cmp_monomials(*a.0, *b.0))
            .map(|(m, c)| (*m, c))
    }

    pub fn leading_monomial(&self, w: &WeightSystem) -> Option<Monomial> {
        self.leading_term(w).map(|(m, _)| m)
    }

    pub fn make_monic(&self, w: &WeightSystem) -> Poly {
        match self.leading_term(w) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            acc + c * num_traits::pow(x.clone(), m.x as usize) * num_traits::pow(y.clone(), m.y as usize)
        })
    }

    /// Terms sorted by descending weighted degree, ties by descending `x`.
    pub fn sorted_terms(&self, w: &WeightSystem) -> Vec<(Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| w.cmp_monomials(b.0, a.0));
        v
    }

    /// Canonical text in the polynomial grammar, terms ordered for `w`.
    pub fn display_with(&self, w: &WeightSystem) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(w).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m == Monomial::ONE {
                out.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format_rational(&abs));
                out.push('*');
                out.push_str(&m.to_string());
            }
        }
        out
    }
}

/// `∂a/∂x · ∂b/∂y − ∂a/∂y · ∂b/∂x`.
pub fn jacobian_det(a: &Poly, b: &Poly) -> Poly {
    &(&a.derivative(Var::X) * &b.derivative(Var::Y)) - &(&a.derivative(Var::Y) * &b.derivative(Var::X))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&WeightSystem::standard()))
    }
}

impl<'a> Add<&'a Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a Poly> for Poly {
    fn add_assign(&mut self, rhs: &'a Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a Poly> for Poly {
    fn sub_assign(&mut self, rhs: &'a Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<'a> Sub<&'a Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl<'a> Mul<&'a Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
