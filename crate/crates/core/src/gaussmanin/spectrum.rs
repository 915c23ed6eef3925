use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{homogeneous_jordan_chains, lambda_clamp, GaussManinError, JordanChainSet};
use crate::curve::CurveFunctionPair;
use crate::rational::{format_rational, ratio, Rational};

/// The spectral numbers with multiplicities, sorted by `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumTable {
    pub entries: Vec<SpectrumEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    #[serde(with = "crate::rational::serde_str")]
    pub lambda: Rational,
    pub multiplicity: usize,
}

impl SpectrumTable {
    pub fn from_values<I: IntoIterator<Item = Rational>>(values: I) -> Self {
        let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
        for v in values {
            *counts.entry(v).or_default() += 1;
        }
        SpectrumTable {
            entries: counts
                .into_iter()
                .map(|(lambda, multiplicity)| SpectrumEntry { lambda, multiplicity })
                .collect(),
        }
    }

    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn multiplicity(&self, lambda: &Rational) -> usize {
        self.entries
            .iter()
            .find(|e| &e.lambda == lambda)
            .map_or(0, |e| e.multiplicity)
    }

    /// Values `λ` with `d(λ) ≠ d(1 − λ)`; empty for a spectrum symmetric
    /// about `1/2`.
    pub fn symmetry_defect(&self) -> Vec<Rational> {
        let one = Rational::one();
        self.entries
            .iter()
            .filter(|e| self.multiplicity(&(&one - &e.lambda)) != e.multiplicity)
            .map(|e| e.lambda.clone())
            .collect()
    }

    /// The spectrum is computed on the central fibre and holds for every `t`.
    pub fn t_independence_note(&self) -> &'static str {
        "valid for all t, n = 1"
    }

    pub fn to_pairs(&self) -> Vec<(String, usize)> {
        self.entries
            .iter()
            .map(|e| (format_rational(&e.lambda), e.multiplicity))
            .collect()
    }
}

pub fn spectrum_from_chains(chains: &JordanChainSet) -> SpectrumTable {
    SpectrumTable::from_values(chains.nus().iter().map(lambda_clamp))
}

pub fn spectrum(pair: &CurveFunctionPair) -> Result<SpectrumTable, GaussManinError> {
    Ok(spectrum_from_chains(&homogeneous_jordan_chains(pair)?))
}

/// Closed form for `f = x`, `g = x^k + y^2`.
pub fn ak_spectrum_oracle(k: i64) -> Result<SpectrumTable, GaussManinError> {
    if k < 2 {
        return Err(GaussManinError::InvalidK(k));
    }
    let half = (k / 2) as usize;
    let mut entries = vec![SpectrumEntry {
        lambda: ratio(0, 1),
        multiplicity: half,
    }];
    if k % 2 == 1 {
        entries.push(SpectrumEntry {
            lambda: ratio(1, 2),
            multiplicity: 1,
        });
    }
    entries.push(SpectrumEntry {
        lambda: ratio(1, 1),
        multiplicity: half,
    });
    Ok(SpectrumTable { entries })
}
