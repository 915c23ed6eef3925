//! Input validation and the singularity invariants of a pair `(f, g)`.
//!
//! A [`CurveFunctionPair`] is a quasi-homogeneous function `f` together with a
//! quasi-homogeneous curve equation `g`, sharing one weight system normalised
//! so that `deg f = 1`. Forms on the curve are written `h·α` with
//! `α = dx∧dy/dg` and are represented by their coefficient `h`; in particular
//! `df = J·α` with `J = ∂(f, g)/∂(x, y)`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::check::Check;
use crate::ideal::{span_rank, GroebnerBasis, IdealError, MonomialOrder, QuotientRing};
use crate::poly::{jacobian_det, Grading, Monomial, Poly, PolyError, Var, WeightSystem};
use crate::rational::{format_rational, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    F,
    G,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::F => "f",
            Which::G => "g",
        })
    }
}

/// Which finiteness condition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsolationCheck {
    /// `dim O/(g, J)` infinite: `f` is constant on a branch of `g = 0`.
    JacobianAlgebra,
    /// `dim O/(f, g)` infinite: `f` and `g` share a component.
    CommonComponent,
    /// `dim O/(g_x, g_y)` infinite: `g` is not reduced.
    CurveSingularity,
}

impl fmt::Display for IsolationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsolationCheck::JacobianAlgebra => "dim O/(g, J) is infinite",
            IsolationCheck::CommonComponent => "dim O/(f, g) is infinite",
            IsolationCheck::CurveSingularity => "dim O/(g_x, g_y) is infinite",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("{0} is the zero polynomial")]
    ZeroPolynomial(Which),
    #[error("{0} is not quasi-homogeneous for the given weights")]
    NotQuasiHomogeneous(Which),
    #[error("f has non-positive weighted degree")]
    DegenerateF,
    #[error("the curve g = 0 is smooth (or empty) at the origin")]
    SmoothCurve,
    #[error("singularity is not isolated: {0}")]
    NonIsolated(IsolationCheck),
    #[error(transparent)]
    Weights(#[from] PolyError),
}

impl ValidationError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            ValidationError::ZeroPolynomial(_) => "ZeroPolynomial",
            ValidationError::NotQuasiHomogeneous(_) => "NotQuasiHomogeneous",
            ValidationError::DegenerateF => "DegenerateF",
            ValidationError::SmoothCurve => "SmoothCurve",
            ValidationError::NonIsolated(_) => "NonIsolated",
            ValidationError::Weights(_) => "InvalidWeights",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("Milnor numbers inconsistent: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// A validated pair with its Jacobian algebra `O/(g, J)`.
#[derive(Debug, Clone)]
pub struct CurveFunctionPair {
    f: Poly,
    g: Poly,
    raw_weights: WeightSystem,
    weights: WeightSystem,
    order: MonomialOrder,
    e: Rational,
    p_total: Rational,
    jacobian: Poly,
    milnor_ring: QuotientRing,
}

fn degree_of(p: &Poly, w: &WeightSystem, which: Which) -> Result<Rational, ValidationError> {
    match p.weighted_degree(w) {
        Ok(Grading::Homogeneous(d)) => Ok(d),
        Ok(Grading::Mixed) => Err(ValidationError::NotQuasiHomogeneous(which)),
        Err(_) => Err(ValidationError::ZeroPolynomial(which)),
    }
}

fn finite_quotient(
    gens: &[Poly],
    order: &MonomialOrder,
    check: IsolationCheck,
) -> Result<QuotientRing, ValidationError> {
    match QuotientRing::from_generators(gens, order) {
        Ok(q) => Ok(q),
        Err(_) => Err(ValidationError::NonIsolated(check)),
    }
}

impl CurveFunctionPair {
    /// Checks the hypotheses on `(f, g)` and normalises the weights so that
    /// `deg f = 1`.
    pub fn validate(f: Poly, g: Poly, raw_weights: WeightSystem) -> Result<Self, ValidationError> {
        if f.is_zero() {
            return Err(ValidationError::ZeroPolynomial(Which::F));
        }
        if g.is_zero() {
            return Err(ValidationError::ZeroPolynomial(Which::G));
        }
        // a constant or linear term makes g = 0 smooth whatever the weights
        let singular = [Monomial::ONE, Monomial::new(1, 0), Monomial::new(0, 1)]
            .iter()
            .all(|m| g.coeff(*m).is_zero());
        if !singular {
            return Err(ValidationError::SmoothCurve);
        }
        let deg_f = degree_of(&f, &raw_weights, Which::F)?;
        degree_of(&g, &raw_weights, Which::G)?;
        if !deg_f.is_positive() {
            return Err(ValidationError::DegenerateF);
        }
        let weights = raw_weights.scaled_down(&deg_f)?;
        let e = degree_of(&g, &weights, Which::G)?;

        let order = MonomialOrder::new(weights.clone());
        let jacobian = jacobian_det(&f, &g);
        let milnor_ring = QuotientRing::with_cofactors(&[g.clone(), jacobian.clone()], &order)
            .map_err(|_| ValidationError::NonIsolated(IsolationCheck::JacobianAlgebra))?;
        finite_quotient(&[f.clone(), g.clone()], &order, IsolationCheck::CommonComponent)?;
        finite_quotient(
            &[g.derivative(Var::X), g.derivative(Var::Y)],
            &order,
            IsolationCheck::CurveSingularity,
        )?;

        let p_total = weights.total();
        Ok(CurveFunctionPair {
            f,
            g,
            raw_weights,
            weights,
            order,
            e,
            p_total,
            jacobian,
            milnor_ring,
        })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    /// `J = f_x g_y - f_y g_x`.
    pub fn jacobian(&self) -> &Poly {
        &self.jacobian
    }

    pub fn raw_weights(&self) -> &WeightSystem {
        &self.raw_weights
    }

    /// Weights normalised so that `deg f = 1`.
    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Weighted degree of `g`.
    pub fn e(&self) -> &Rational {
        &self.e
    }

    /// `p_x + p_y`.
    pub fn p_total(&self) -> &Rational {
        &self.p_total
    }

    /// `O/(g, J)`; its Gröbner basis tracks cofactors in `(g, J)`.
    pub fn milnor_ring(&self) -> &QuotientRing {
        &self.milnor_ring
    }

    pub fn mu(&self) -> usize {
        self.milnor_ring.dim()
    }

    pub fn gx(&self) -> Poly {
        self.g.derivative(Var::X)
    }

    pub fn gy(&self) -> Poly {
        self.g.derivative(Var::Y)
    }

    /// `ν = deg + p_total − e`.
    pub fn nu_of_degree(&self, degree: &Rational) -> Rational {
        degree + &self.p_total - &self.e
    }

    /// Degree of the socle of `O/(g, J)`: `1 + 2(e − p_total)`.
    pub fn socle_degree(&self) -> Rational {
        Rational::one() + rat(2) * (&self.e - &self.p_total)
    }

    pub fn quotient(&self, gens: &[Poly]) -> Result<QuotientRing, IdealError> {
        QuotientRing::from_generators(gens, &self.order)
    }

    pub fn display(&self, p: &Poly) -> String {
        p.display_with(&self.weights)
    }
}

/// `μ = dim O/(g, J)`, `μ₁ = dim O/(g_x, g_y)`, `μ₂ = dim O/(f, g) − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MilnorReport {
    pub mu: usize,
    pub mu1: usize,
    pub mu2: usize,
}

pub fn milnor_numbers(pair: &CurveFunctionPair) -> Result<MilnorReport, CurveError> {
    let mu = pair.mu();
    let mu1 = pair.quotient(&[pair.gx(), pair.gy()])?.dim();
    let fg = pair.quotient(&[pair.f.clone(), pair.g.clone()])?.dim();
    let mu2 = fg
        .checked_sub(1)
        .ok_or_else(|| CurveError::Inconsistent("dim O/(f, g) = 0".into()))?;
    let mu2_alt = pair
        .quotient(&[pair.f.clone(), pair.g.clone(), pair.jacobian.clone()])?
        .dim();
    if mu2 != mu2_alt {
        return Err(CurveError::Inconsistent(format!(
            "dim O/(f,g) - 1 = {mu2} but dim O/(f,g,J) = {mu2_alt}"
        )));
    }
    if mu != mu1 + mu2 {
        return Err(CurveError::Inconsistent(format!(
            "mu = {mu} but mu1 + mu2 = {mu1} + {mu2}"
        )));
    }
    Ok(MilnorReport { mu, mu1, mu2 })
}

/// The three dimensions that the exact sequence for multiplication by `f`
/// on `O/(g, J)` forces to agree with `μ₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelIdentity {
    /// `dim ker(f·)` on `O/(g, J)`.
    pub kernel: usize,
    /// `dim ((g_x, g_y) + (g)) / ((g) + (J))`.
    pub curve_jacobian_image: usize,
    /// `dim O/(f, g, J)`.
    pub cokernel: usize,
    pub mu2: usize,
}

impl KernelIdentity {
    pub fn holds(&self) -> bool {
        self.kernel == self.mu2 && self.curve_jacobian_image == self.mu2 && self.cokernel == self.mu2
    }

    pub fn check(&self) -> Check {
        Check::new(
            "kernel_identity",
            self.holds(),
            format!(
                "ker(f) = {}, dim (J_g+I)/(I+(J)) = {}, dim O/(f,g,J) = {}, mu2 = {}",
                self.kernel, self.curve_jacobian_image, self.cokernel, self.mu2
            ),
        )
    }
}

pub fn kernel_identity(pair: &CurveFunctionPair) -> Result<KernelIdentity, CurveError> {
    let ring = &pair.milnor_ring;
    let mu2 = milnor_numbers(pair)?.mu2;
    let kernel = ring.dim() - ring.mult_matrix(&pair.f).rank();
    let one = Rational::one();
    let (gx, gy) = (pair.gx(), pair.gy());
    let images: Vec<Vec<Rational>> = ring
        .staircase()
        .iter()
        .flat_map(|m| [ring.coords(&gx.mul_term(&one, *m)), ring.coords(&gy.mul_term(&one, *m))])
        .collect();
    let curve_jacobian_image = span_rank(&images);
    let cokernel = pair
        .quotient(&[pair.f.clone(), pair.g.clone(), pair.jacobian.clone()])?
        .dim();
    Ok(KernelIdentity {
        kernel,
        curve_jacobian_image,
        cokernel,
        mu2,
    })
}

/// Euler/Cramer identities `p_x·x·J ≡ f·g_y` and `p_y·y·J ≡ −f·g_x` modulo `(g)`.
pub fn euler_identity_check(pair: &CurveFunctionPair) -> Check {
    euler_identity_with(pair, &pair.jacobian)
}

pub(crate) fn euler_identity_with(pair: &CurveFunctionPair, jacobian: &Poly) -> Check {
    let w = &pair.weights;
    let x_side = &(&Poly::x() * jacobian).scale(w.px()) - &(&pair.f * &pair.gy());
    let y_side = &(&Poly::y() * jacobian).scale(w.py()) + &(&pair.f * &pair.gx());
    let ideal = GroebnerBasis::new(std::slice::from_ref(&pair.g), &pair.order).expect("g is nonzero");
    let rx = ideal.normal_form(&x_side);
    let ry = ideal.normal_form(&y_side);
    Check::new(
        "euler_identity",
        rx.is_zero() && ry.is_zero(),
        format!("residues mod (g): [{}], [{}]", pair.display(&rx), pair.display(&ry)),
    )
}

/// `ν(g_x) > 0` and `ν(g_y) > 0` for the generators of the curve's Jacobian
/// ideal.
pub fn nu_positivity_check(pair: &CurveFunctionPair) -> Check {
    let mut details = Vec::new();
    let mut pass = true;
    for (name, h) in [("g_x", pair.gx()), ("g_y", pair.gy())] {
        if h.is_zero() {
            continue;
        }
        match h.weighted_degree(&pair.weights) {
            Ok(Grading::Homogeneous(d)) => {
                let nu = pair.nu_of_degree(&d);
                pass &= nu.is_positive();
                details.push(format!("nu({name}) = {}", format_rational(&nu)));
            }
            _ => {
                pass = false;
                details.push(format!("{name} not homogeneous"));
            }
        }
    }
    Check::new("nu_positivity", pass, details.join(", "))
}

/// `dim O/(g − t0, J)` for each sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuConstancy {
    pub mu: usize,
    pub samples: Vec<(Rational, Option<usize>)>,
}

impl MuConstancy {
    pub fn holds(&self) -> bool {
        self.samples.iter().all(|(_, d)| *d == Some(self.mu))
    }

    pub fn check(&self) -> Check {
        let details: Vec<String> = self
            .samples
            .iter()
            .map(|(t, d)| match d {
                Some(d) => format!("t={}: {d}", format_rational(t)),
                None => format!("t={}: infinite", format_rational(t)),
            })
            .collect();
        Check::new(
            "mu_constancy",
            self.holds(),
            format!("mu = {}; {}", self.mu, details.join(", ")),
        )
    }
}

/// Fibre dimensions `dim O/(g − t0, J)` at `t0 = 0` and every sample.
pub fn mu_constancy_probe(pair: &CurveFunctionPair, t_samples: &[Rational]) -> MuConstancy {
    let zero = Rational::zero();
    let samples = std::iter::once(&zero)
        .chain(t_samples.iter().filter(|t| !t.is_zero()))
        .map(|t0| {
            let shifted = &pair.g - &Poly::constant(t0.clone());
            let dim = pair.quotient(&[shifted, pair.jacobian.clone()]).ok().map(|q| q.dim());
            (t0.clone(), dim)
        })
        .collect();
    MuConstancy { mu: pair.mu(), samples }
}

/// `1, 2, −1` followed by two seeded rationals `p/q` with `1 ≤ p, q ≤ 7`.
pub fn default_t_samples(seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![rat(1), rat(2), rat(-1)];
    for _ in 0..2 {
        let p: i64 = rng.random_range(1..=7);
        let q: i64 = rng.random_range(1..=7);
        out.push(Rational::new(p.into(), q.into()));
    }
    out
}
