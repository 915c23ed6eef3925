//! Brieskorn-lattice data of a pair `(f, g)`: Jordan chains of `−f` on the
//! Jacobian algebra, spectrum, connection matrices and the reduction of
//! forms `h·α` to the chain basis.

mod brieskorn;
mod chains;
mod connection;
mod spectrum;

pub use brieskorn::{connection_consistency_check, BrieskornElement, BrieskornLattice, Decomposition, TElement};
pub use chains::{chain_grading_check, homogeneous_jordan_chains, ChainVector, JordanChain, JordanChainSet};
pub use connection::{connection_matrices, connection_shape_check, tilde_basis, ConnectionPair};
pub use spectrum::{ak_spectrum_oracle, spectrum, spectrum_from_chains, SpectrumEntry, SpectrumTable};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::curve::{CurveError, CurveFunctionPair};
use crate::ideal::{IdealError, QMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussManinError {
    #[error("chain vectors do not form a basis of the Jacobian algebra")]
    NotABasis,
    #[error("k must be at least 2, got {0}")]
    InvalidK(i64),
    #[error("chain basis matrix is singular")]
    SingularChainBasis,
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Multiplication by `−f` on `O/(g, J)` in the staircase basis.
pub fn minus_f_operator(pair: &CurveFunctionPair) -> QMatrix {
    pair.milnor_ring().mult_matrix(&-pair.f())
}

/// `ν = deg + p_total − e`.
pub fn nu_value(degree: &Rational, pair: &CurveFunctionPair) -> Rational {
    pair.nu_of_degree(degree)
}

/// Clamps `ν` to `[0, 1]`.
pub fn lambda_clamp(nu: &Rational) -> Rational {
    if nu.is_negative() {
        Rational::zero()
    } else if *nu > Rational::one() {
        Rational::one()
    } else {
        nu.clone()
    }
}
