//! Problem files, JSON reports and the verification suite behind the
//! command-line tool.
//!
//! Every rational in a report is a `"p/q"` string. Reports are emitted
//! through [`serde_json::Value`], whose maps are ordered, so keys come out
//! sorted and identical inputs give identical bytes.

mod problem;
mod run;
mod verify;

pub use problem::{load_problem, LoadError, Problem, ProblemSpec};
pub use run::{emit_json, run_subcommand, Command, ExitCode, Outcome, RunOptions};
pub use verify::{fibre_probes, run_checks, run_verification, VerifyOptions};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::check::Check;
use crate::curve::{milnor_numbers, CurveError, CurveFunctionPair};
use crate::frobenius::{
    bezoutian_dual_basis, chain_frobenius_data, frobenius_data, BasisKind, FrobeniusData, FrobeniusError,
    ResidueFunctional,
};
use crate::gaussmanin::{
    homogeneous_jordan_chains, lambda_clamp, spectrum_from_chains, ConnectionPair, GaussManinError, JordanChainSet,
    SpectrumTable,
};
use crate::ideal::QMatrix;
use crate::poly::Poly;
use crate::rational::format_rational;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    GaussManin(#[from] GaussManinError),
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
}

type Matrix = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsEcho {
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub f: String,
    pub g: String,
    pub raw_weights: WeightsEcho,
    /// Weights scaled so that `deg f = 1`.
    pub weights: WeightsEcho,
    pub e: String,
    pub p_total: String,
    pub jacobian: String,
    pub socle_degree: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MilnorSection {
    pub mu: usize,
    pub mu1: usize,
    pub mu2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainVectorSection {
    pub representative: String,
    pub coords: Vec<String>,
    pub degree: String,
    pub nu: String,
    pub lambda: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDiagnostics {
    pub symmetry_defect: Vec<String>,
    pub t_independence: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionSection {
    pub basis_labels: Vec<(usize, usize)>,
    pub a0: Matrix,
    pub ainf: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSection {
    pub basis: Vec<String>,
    pub nu: Vec<String>,
    pub metric_raw: Matrix,
    pub metric_normalized: Matrix,
    /// `[a][b][c]`: coefficient of basis element `c` in the product of `a`
    /// and `b`.
    pub structure_constants: Vec<Matrix>,
    pub unit_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueSection {
    pub staircase: Vec<String>,
    pub values: Vec<String>,
    pub socle_monomial: String,
    pub socle_residue: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusSection {
    /// Staircase monomials of `O/(g, J)`.
    pub basis_monomials: Vec<String>,
    pub residue: ResidueSection,
    pub monomial_basis: AlgebraSection,
    pub chain_basis: AlgebraSection,
}

/// Outcome of one fibre algebra `O/(g − t0, J_F)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeSection {
    pub t0: String,
    pub u: Vec<String>,
    pub dim: Option<usize>,
    /// `semisimple`, `inconclusive` or `dimension_mismatch`.
    pub status: String,
    pub certificate_element: Option<String>,
    pub minimal_polynomial: Option<String>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: InputEcho,
    pub milnor: MilnorSection,
    pub chains: Vec<Vec<ChainVectorSection>>,
    /// `[λ, multiplicity]` pairs, ascending.
    pub spectrum: Vec<[String; 2]>,
    pub spectrum_diagnostics: SpectrumDiagnostics,
    pub connection: ConnectionSection,
    pub frobenius: FrobeniusSection,
    pub checks: Vec<Check>,
    /// Filled by verification only.
    pub fibre_probes: Vec<ProbeSection>,
}

fn matrix(m: &QMatrix) -> Matrix {
    m.to_strings()
}

fn weights_echo(w: &crate::poly::WeightSystem) -> WeightsEcho {
    WeightsEcho {
        x: format_rational(w.px()),
        y: format_rational(w.py()),
    }
}

pub fn input_echo(pair: &CurveFunctionPair) -> InputEcho {
    InputEcho {
        f: pair.display(pair.f()),
        g: pair.display(pair.g()),
        raw_weights: weights_echo(pair.raw_weights()),
        weights: weights_echo(pair.weights()),
        e: format_rational(pair.e()),
        p_total: format_rational(pair.p_total()),
        jacobian: pair.display(pair.jacobian()),
        socle_degree: format_rational(&pair.socle_degree()),
    }
}

pub fn chains_section(pair: &CurveFunctionPair, chains: &JordanChainSet) -> Vec<Vec<ChainVectorSection>> {
    chains
        .chains()
        .iter()
        .map(|c| {
            c.vectors
                .iter()
                .map(|v| ChainVectorSection {
                    representative: pair.display(&v.representative),
                    coords: v.coords.iter().map(format_rational).collect(),
                    degree: format_rational(&v.degree),
                    nu: format_rational(&v.nu),
                    lambda: format_rational(&lambda_clamp(&v.nu)),
                })
                .collect()
        })
        .collect()
}

pub fn spectrum_section(table: &SpectrumTable) -> Vec<[String; 2]> {
    table
        .entries
        .iter()
        .map(|e| [format_rational(&e.lambda), e.multiplicity.to_string()])
        .collect()
}

pub fn connection_section(conn: &ConnectionPair) -> ConnectionSection {
    ConnectionSection {
        basis_labels: conn.basis_labels.clone(),
        a0: matrix(&conn.a0),
        ainf: matrix(&conn.ainf),
    }
}

pub fn algebra_section(pair: &CurveFunctionPair, data: &FrobeniusData) -> AlgebraSection {
    AlgebraSection {
        basis: data.basis.iter().map(|h| pair.display(h)).collect(),
        nu: data.nus.iter().map(format_rational).collect(),
        metric_raw: matrix(&data.metric_raw),
        metric_normalized: matrix(&data.metric_normalized),
        structure_constants: data
            .structure_constants
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(format_rational).collect()).collect())
            .collect(),
        unit_index: data.unit_index,
    }
}

/// Everything the report needs, computed once.
#[derive(Debug, Clone)]
pub struct Analysis<'a> {
    pub pair: &'a CurveFunctionPair,
    pub chains: JordanChainSet,
    pub spectrum: SpectrumTable,
    pub connection: ConnectionPair,
    pub residue: ResidueFunctional,
    pub chain_data: FrobeniusData,
    pub monomial_data: FrobeniusData,
}

impl<'a> Analysis<'a> {
    pub fn new(pair: &'a CurveFunctionPair) -> Result<Self, PipelineError> {
        let chains = homogeneous_jordan_chains(pair)?;
        let spectrum = spectrum_from_chains(&chains);
        let connection = ConnectionPair::from_chains(&chains);
        let residue = bezoutian_dual_basis(pair)?;
        let chain_data = chain_frobenius_data(pair, &chains)?;
        let staircase: Vec<Poly> = pair
            .milnor_ring()
            .staircase()
            .iter()
            .map(|m| Poly::monomial(*m))
            .collect();
        let monomial_data = frobenius_data(pair, &residue, BasisKind::Monomial, staircase)?;
        Ok(Analysis {
            pair,
            chains,
            spectrum,
            connection,
            residue,
            chain_data,
            monomial_data,
        })
    }

    pub fn frobenius_section(&self) -> FrobeniusSection {
        let pair = self.pair;
        FrobeniusSection {
            basis_monomials: pair.milnor_ring().staircase().iter().map(|m| m.to_string()).collect(),
            residue: ResidueSection {
                staircase: self.residue.staircase.iter().map(|m| m.to_string()).collect(),
                values: self.residue.values.iter().map(format_rational).collect(),
                socle_monomial: self.chain_data.socle.to_string(),
                socle_residue: format_rational(&self.chain_data.socle_residue),
            },
            monomial_basis: algebra_section(pair, &self.monomial_data),
            chain_basis: algebra_section(pair, &self.chain_data),
        }
    }

    /// The full report with the given checks and probes attached.
    pub fn report(&self, checks: Vec<Check>, fibre_probes: Vec<ProbeSection>) -> Result<Report, PipelineError> {
        let m = milnor_numbers(self.pair)?;
        Ok(Report {
            input: input_echo(self.pair),
            milnor: MilnorSection {
                mu: m.mu,
                mu1: m.mu1,
                mu2: m.mu2,
            },
            chains: chains_section(self.pair, &self.chains),
            spectrum: spectrum_section(&self.spectrum),
            spectrum_diagnostics: SpectrumDiagnostics {
                symmetry_defect: self.spectrum.symmetry_defect().iter().map(format_rational).collect(),
                t_independence: self.spectrum.t_independence_note().to_string(),
            },
            connection: connection_section(&self.connection),
            frobenius: self.frobenius_section(),
            checks,
            fibre_probes,
        })
    }
}

/// Oracle-versus-pipeline comparison for `f = x`, `g = x^k + y^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AkComparison {
    pub k: i64,
    pub oracle: Vec<[String; 2]>,
    pub pipeline: Vec<[String; 2]>,
    /// Entries present in exactly one of the two tables, tagged by side.
    pub diff: Vec<BTreeMap<String, String>>,
}

impl AkComparison {
    pub fn matches(&self) -> bool {
        self.diff.is_empty()
    }
}
