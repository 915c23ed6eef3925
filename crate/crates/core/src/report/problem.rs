use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::{CurveFunctionPair, ValidationError};
use crate::poly::{parse_polynomial, PolyError, WeightSystem};
use crate::rational::{parse_rational, Rational};

/// Problem file as read from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub weights: BTreeMap<String, String>,
    pub f: String,
    pub g: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_samples: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u_samples: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("cannot parse {field}: {source}")]
    Polynomial { field: &'static str, source: PolyError },
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("u_samples entry {index} has length {got}, expected mu = {expected}")]
    ParameterLength { index: usize, expected: usize, got: usize },
}

impl LoadError {
    /// Stable machine-readable code; validation errors keep their own.
    pub fn code(&self) -> &'static str {
        match self {
            LoadError::Io(_) => "Io",
            LoadError::Json(_) => "MalformedJson",
            LoadError::Schema(_) => "SchemaViolation",
            LoadError::Polynomial { .. } => "PolynomialSyntax",
            LoadError::Validation(e) => e.code(),
            LoadError::ParameterLength { .. } => "ParameterLength",
        }
    }
}

/// A validated problem with its optional sampling data parsed.
#[derive(Debug, Clone)]
pub struct Problem {
    pub pair: CurveFunctionPair,
    pub seed: Option<u64>,
    pub t_samples: Option<Vec<Rational>>,
    pub u_samples: Option<Vec<Vec<Rational>>>,
}

fn rationals(list: &[String], what: &str) -> Result<Vec<Rational>, LoadError> {
    list.iter()
        .map(|s| parse_rational(s).map_err(|_| LoadError::Schema(format!("{what}: {s:?} is not a rational"))))
        .collect()
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<Self, LoadError> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| LoadError::Json(e.to_string()))?;
        serde_json::from_value(value).map_err(|e| LoadError::Schema(e.to_string()))
    }

    pub fn into_problem(self) -> Result<Problem, LoadError> {
        let keys: Vec<&str> = self.weights.keys().map(String::as_str).collect();
        if keys != ["x", "y"] {
            return Err(LoadError::Schema("weights must have exactly the keys x and y".into()));
        }
        let w = rationals(&[self.weights["x"].clone(), self.weights["y"].clone()], "weights")?;
        let weights = WeightSystem::new(w[0].clone(), w[1].clone()).map_err(ValidationError::Weights)?;
        let f = parse_polynomial(&self.f).map_err(|source| LoadError::Polynomial { field: "f", source })?;
        let g = parse_polynomial(&self.g).map_err(|source| LoadError::Polynomial { field: "g", source })?;
        let pair = CurveFunctionPair::validate(f, g, weights)?;
        let t_samples = self
            .t_samples
            .as_deref()
            .map(|t| rationals(t, "t_samples"))
            .transpose()?;
        let u_samples = self
            .u_samples
            .as_ref()
            .map(|us| {
                us.iter()
                    .map(|u| rationals(u, "u_samples"))
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()?;
        let mu = pair.mu();
        if let Some((index, u)) = u_samples.iter().flatten().enumerate().find(|(_, u)| u.len() != mu) {
            return Err(LoadError::ParameterLength {
                index,
                expected: mu,
                got: u.len(),
            });
        }
        Ok(Problem {
            pair,
            seed: self.seed,
            t_samples,
            u_samples,
        })
    }
}

/// Reads a problem from `path`, or from standard input when `path` is `None`.
pub fn load_problem(path: Option<&Path>) -> Result<Problem, LoadError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    ProblemSpec::from_json(&text)?.into_problem()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_examples() {
        let p = ProblemSpec::from_json(r#"{"weights":{"x":"1","y":"3/2"},"f":"x","g":"x^3 + y^2"}"#)
            .unwrap()
            .into_problem()
            .unwrap();
        assert_eq!(p.pair.mu(), 3);
        let p = ProblemSpec::from_json(r#"{"weights":{"x":"1","y":"1"},"f":"x + y","g":"x*y"}"#)
            .unwrap()
            .into_problem()
            .unwrap();
        assert_eq!(p.pair.mu(), 2);
    }

    #[test]
    fn error_codes() {
        let code = |s: &str| {
            ProblemSpec::from_json(s)
                .and_then(ProblemSpec::into_problem)
                .unwrap_err()
                .code()
        };
        assert_eq!(
            code(r#"{"weights":{"x":"1","y":"1"},"f":"x","g":"x + y^2"}"#),
            "SmoothCurve"
        );
        assert_eq!(code("{"), "MalformedJson");
        assert_eq!(code(r#"{"weights":{"x":"1"},"f":"x","g":"x*y"}"#), "SchemaViolation");
        assert_eq!(
            code(r#"{"weights":{"x":"1","y":"1"},"f":"x","g":"x*y","h":1}"#),
            "SchemaViolation"
        );
        assert_eq!(
            code(r#"{"weights":{"x":"1","y":"1"},"f":"x z","g":"x*y"}"#),
            "PolynomialSyntax"
        );
        assert_eq!(
            code(r#"{"weights":{"x":"-1","y":"1"},"f":"x","g":"x*y"}"#),
            "InvalidWeights"
        );
        assert_eq!(
            code(r#"{"weights":{"x":"1","y":"1"},"f":"x + y","g":"x*y","u_samples":[["0","0","0"]]}"#),
            "ParameterLength"
        );
    }
}
