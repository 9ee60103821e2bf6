//! JSON documents for configurations, divisors and oracle filtration specs.
//!
//! Rationals cross this boundary as strings in lowest terms with positive
//! denominator (`"p/q"`, or `"p"` for integers) so no floating point ever
//! contaminates the exact path. Key order is fixed by the struct layouts,
//! making reports byte-stable for identical inputs.

use crate::config::{ExceptionalConfig, QDivisor, ValidationError};
use crate::oracle::{MonomialValuation, OracleError, OracleFiltrationSpec};
use crate::rational::{format_rational, parse_rational, Q};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("bad rational: {0}")]
    Rational(#[from] crate::rational::ParseRationalError),
    #[error("bad valuation: {0}")]
    Valuation(OracleError),
}

/// `{"curves":[...], "gram":[[int]], "branches":[[indices]], "weights":[int]}`.
///
/// `branches` and `weights` may be omitted: the default is a single branch
/// containing every curve, with weight 1.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigDoc {
    pub curves: Vec<String>,
    pub gram: Vec<Vec<i64>>,
    #[serde(default)]
    pub branches: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub weights: Option<Vec<u64>>,
}

impl ConfigDoc {
    pub fn from_json(text: &str) -> Result<Self, SchemaError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Validates and builds the configuration.
    pub fn build(&self) -> Result<ExceptionalConfig, ValidationError> {
        let branches = self
            .branches
            .clone()
            .unwrap_or_else(|| vec![(0..self.curves.len()).collect()]);
        let weights = self.weights.clone().unwrap_or_else(|| vec![1; branches.len()]);
        ExceptionalConfig::new(self.curves.clone(), self.gram.clone(), branches, weights)
    }

    pub fn from_config(config: &ExceptionalConfig) -> Self {
        Self {
            curves: config.curve_labels().to_vec(),
            gram: config.gram().to_vec(),
            branches: Some(config.branches().to_vec()),
            weights: Some(config.branch_weights().to_vec()),
        }
    }
}

/// Serializes a divisor as its list of rational strings.
pub fn divisor_to_strings(d: &QDivisor) -> Vec<String> {
    d.coefficients().iter().map(format_rational).collect()
}

/// Parses a divisor from rational strings.
pub fn divisor_from_strings(coeffs: &[String]) -> Result<QDivisor, SchemaError> {
    let parsed: Result<Vec<Q>, _> = coeffs.iter().map(|s| parse_rational(s)).collect();
    Ok(QDivisor::new(parsed?))
}

/// Renders a rational matrix as strings.
pub fn matrix_to_strings(m: &[Vec<Q>]) -> Vec<Vec<String>> {
    m.iter()
        .map(|row| row.iter().map(format_rational).collect())
        .collect()
}

/// One term of a filtration spec: `I_n` includes `I(v_{a,b})_{n c}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermDoc {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

/// `{"terms":[{"a":int,"b":int,"c":int}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpecDoc {
    pub terms: Vec<TermDoc>,
}

impl SpecDoc {
    pub fn from_json(text: &str) -> Result<Self, SchemaError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn build(&self) -> Result<OracleFiltrationSpec, OracleError> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((MonomialValuation::new(t.a, t.b)?, t.c)))
            .collect::<Result<Vec<_>, OracleError>>()?;
        OracleFiltrationSpec::new(terms)
    }

    pub fn from_spec(spec: &OracleFiltrationSpec) -> Self {
        Self {
            terms: spec
                .terms()
                .iter()
                .map(|&(v, c)| TermDoc {
                    a: v.a(),
                    b: v.b(),
                    c,
                })
                .collect(),
        }
    }
}
