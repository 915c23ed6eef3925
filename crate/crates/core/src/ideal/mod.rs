//! Gröbner bases, normal forms and finite-dimensional quotient rings.

mod groebner;
mod matrix;
mod quotient;

use thiserror::Error;

pub use groebner::{GroebnerBasis, MonomialOrder};
pub use matrix::{span_rank, EchelonSpan, QMatrix};
pub use quotient::{quotient_dim, QuotientRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("every generator is zero")]
    AllZero,
    #[error("quotient ring is infinite-dimensional")]
    InfiniteDimensional,
    #[error("polynomial is not in the ideal")]
    NotInIdeal,
    #[error("Gröbner basis was built without cofactor tracking")]
    CofactorsNotTracked,
}
