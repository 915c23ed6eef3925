//! Exact bivariate polynomials, weighted gradings and the text format.

mod monomial;
mod parse;
mod polynomial;
mod weights;

use thiserror::Error;

pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use polynomial::{jacobian_det, Grading, Poly, Var};
pub use weights::WeightSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable {name:?} at byte {offset}; only x and y are allowed")]
    UnknownVariable { offset: usize, name: String },
    #[error("negative exponent at byte {offset}")]
    NegativeExponentAt { offset: usize },
    #[error("non-integer exponent at byte {offset}")]
    NonIntegerExponent { offset: usize },
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("weighted degree of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("weights must be strictly positive")]
    NonPositiveWeight,
    #[error("weights too large to compare exactly")]
    WeightsTooLarge,
}
