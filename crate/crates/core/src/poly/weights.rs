use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{Monomial, PolyError};
use crate::rational::{serde_str, Rational};

/// Positive rational weights for `x` and `y`.
///
/// The weighted degree of `x^a y^b` is `a*p_x + b*p_y`. For fast exact
/// comparisons the weights are also kept as a pair of coprime integers
/// proportional to `(p_x, p_y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawWeights", into = "RawWeights")]
pub struct WeightSystem {
    px: Rational,
    py: Rational,
    int_x: u64,
    int_y: u64,
}

#[derive(Serialize, Deserialize)]
struct RawWeights {
    #[serde(with = "serde_str")]
    x: Rational,
    #[serde(with = "serde_str")]
    y: Rational,
}

impl TryFrom<RawWeights> for WeightSystem {
    type Error = PolyError;
    fn try_from(raw: RawWeights) -> Result<Self, PolyError> {
        WeightSystem::new(raw.x, raw.y)
    }
}

impl From<WeightSystem> for RawWeights {
    fn from(w: WeightSystem) -> Self {
        RawWeights { x: w.px, y: w.py }
    }
}

impl WeightSystem {
    pub fn new(px: Rational, py: Rational) -> Result<Self, PolyError> {
        if !px.is_positive() || !py.is_positive() {
            return Err(PolyError::NonPositiveWeight);
        }
        // Scale both weights by the lcm of the denominators and strip the gcd.
        let l = px.denom().lcm(py.denom());
        let ax = (px.numer() * (&l / px.denom())).clone();
        let ay = (py.numer() * (&l / py.denom())).clone();
        let g = ax.gcd(&ay);
        let to_u64 = |v: BigInt| v.to_u64().filter(|v| *v <= u32::MAX as u64);
        let (int_x, int_y) = match (to_u64(&ax / &g), to_u64(&ay / &g)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(PolyError::WeightsTooLarge),
        };
        Ok(WeightSystem { px, py, int_x, int_y })
    }

    pub fn from_ints(px: i64, py: i64) -> Result<Self, PolyError> {
        Self::new(Rational::from_integer(px.into()), Rational::from_integer(py.into()))
    }

    pub fn standard() -> Self {
        Self::from_ints(1, 1).expect("unit weights are valid")
    }

    pub fn px(&self) -> &Rational {
        &self.px
    }

    pub fn py(&self) -> &Rational {
        &self.py
    }

    /// `p_x + p_y`.
    pub fn total(&self) -> Rational {
        &self.px + &self.py
    }

    pub fn degree(&self, m: Monomial) -> Rational {
        &self.px * Rational::from_integer(m.x.into()) + &self.py * Rational::from_integer(m.y.into())
    }

    /// Integer-valued degree proportional to [`WeightSystem::degree`].
    pub fn int_degree(&self, m: Monomial) -> u64 {
        self.int_x * m.x as u64 + self.int_y * m.y as u64
    }

    /// Divides both weights by `d`.
    pub fn scaled_down(&self, d: &Rational) -> Result<Self, PolyError> {
        if d.is_zero() {
            return Err(PolyError::NonPositiveWeight);
        }
        Self::new(&self.px / d, &self.py / d)
    }

    /// Weighted degree, then larger `x` exponent first.
    pub fn cmp_monomials(&self, a: Monomial, b: Monomial) -> Ordering {
        self.int_degree(a).cmp(&self.int_degree(b)).then(a.x.cmp(&b.x))
    }

    /// Ascending weighted degree, ties by descending `x` exponent.
    pub fn staircase_cmp(&self, a: Monomial, b: Monomial) -> Ordering {
        self.int_degree(a).cmp(&self.int_degree(b)).then(b.x.cmp(&a.x))
    }

    pub fn is_unit(&self) -> bool {
        self.px.is_one() && self.py.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn integer_weights_are_reduced() {
        let w = WeightSystem::new(ratio(1, 2), ratio(1, 3)).unwrap();
        assert_eq!((w.int_x, w.int_y), (3, 2));
        let w = WeightSystem::new(ratio(1, 1), ratio(3, 2)).unwrap();
        assert_eq!((w.int_x, w.int_y), (2, 3));
        assert_eq!(w.total(), ratio(5, 2));
    }

    #[test]
    fn rejects_non_positive() {
        assert_eq!(
            WeightSystem::new(ratio(0, 1), ratio(1, 1)),
            Err(PolyError::NonPositiveWeight)
        );
        assert!(WeightSystem::new(ratio(-1, 2), ratio(1, 1)).is_err());
    }

    #[test]
    fn order_is_degree_then_x() {
        let w = WeightSystem::standard();
        assert_eq!(
            w.cmp_monomials(Monomial::new(2, 0), Monomial::new(1, 1)),
            Ordering::Greater
        );
        assert_eq!(
            w.cmp_monomials(Monomial::new(0, 3), Monomial::new(2, 0)),
            Ordering::Greater
        );
    }
}
