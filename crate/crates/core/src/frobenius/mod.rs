//! Residue pairing, structure constants and Frobenius-algebra checks of the
//! Jacobian algebra, plus semisimplicity probes on smooth fibres.

mod algebra;
mod probe;
mod residue;

pub use algebra::{
    chain_frobenius_data, frobenius_axiom_check, frobenius_data, monomial_frobenius_data, nilpotency_indices,
    nilpotency_probe, primitivity_check, BasisKind, FrobeniusData,
};
pub use probe::{
    fibre_semisimplicity_probe, minimal_polynomial, random_small_u, FibreProbeReport, ProbeStatus,
    SemisimplicityCertificate,
};
pub use residue::{
    bezoutian_dual_basis, dual_basis_check, euler_jacobi_check, socle_degree_check, socle_monomial, ResidueFunctional,
};

use thiserror::Error;

use crate::ideal::IdealError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("Bezoutian coefficient matrix is singular")]
    DegenerateBezoutian,
    #[error("basis elements are linearly dependent in the Jacobian algebra")]
    NotABasis,
    #[error("socle is not spanned by a single staircase monomial with nonzero residue")]
    Socle,
    #[error("no basis element represents 1")]
    NoUnit,
    #[error("fibre probe needs t0 != 0")]
    ZeroFibre,
    #[error("parameter vector has length {got}, expected {expected}")]
    ParameterLength { expected: usize, got: usize },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}
