//! Exact invariants of a quasi-homogeneous function restricted to a
//! quasi-homogeneous family of plane curves `g = t`.
//!
//! The pipeline runs bottom-up:
//!
//! * [`poly`]: rational bivariate polynomials, weighted gradings, parsing;
//! * [`ideal`]: Gröbner bases, staircases, multiplication matrices;
//! * [`curve`]: input validation and Milnor numbers;
//! * [`gaussmanin`]: homogeneous Jordan chains of `-f`, spectrum, connection
//!   matrices, reduction in the Brieskorn lattice;
//! * [`frobenius`]: residue pairing, metric, multiplication table and probes;
//! * [`report`]: problem files, JSON reports and the verification suite.

pub mod check;
pub mod curve;
pub mod frobenius;
pub mod gaussmanin;
pub mod ideal;
pub mod poly;
pub mod rational;
pub mod report;
pub mod unipoly;

pub use curve::{CurveFunctionPair, MilnorReport, ValidationError};
pub use ideal::{GroebnerBasis, MonomialOrder, QMatrix, QuotientRing};
pub use poly::{parse_polynomial, Monomial, Poly, WeightSystem};
pub use rational::Rational;
