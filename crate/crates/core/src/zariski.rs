//! Zariski decomposition of effective divisors with exceptional support.
//!
//! For an effective rational divisor `D` supported on the exceptional curves
//! there is a unique minimal effective anti-nef divisor `Delta >= D`; writing
//! `Delta = D + B` makes `B` effective with `Delta . E = 0` on every component
//! of `B`. The production path grows the null support iteratively, solving an
//! exact linear system per round; a subset-enumeration oracle over the same
//! contract is kept for cross-checking.

use crate::config::{ConfigError, ExceptionalConfig, QDivisor};
use crate::rational::{ceil_int, int, solve_exact, Q};
use num::{Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

/// Subset-enumeration cap for [`brute_force_decompose`].
pub const BRUTE_FORCE_MAX_CURVES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZariskiError {
    #[error("divisor is not effective (coefficient {index} is negative)")]
    NotEffective { index: usize },
    #[error("internal invariant violated: {reason}")]
    InternalInvariantViolation { reason: String },
    #[error("brute force enumeration supports at most {max} curves, got {count}")]
    TooManyCurves { count: usize, max: usize },
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// The decomposition `Delta = D + B` together with the null support
/// `{ E : Delta . E = 0 }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZariskiDecomposition {
    d: QDivisor,
    delta: QDivisor,
    b: QDivisor,
    null_support: BTreeSet<usize>,
}

impl ZariskiDecomposition {
    pub fn input(&self) -> &QDivisor {
        &self.d
    }

    /// The anti-nef part `Delta`.
    pub fn delta(&self) -> &QDivisor {
        &self.delta
    }

    /// The effective part `B = Delta - D`.
    pub fn effective_part(&self) -> &QDivisor {
        &self.b
    }

    pub fn null_support(&self) -> &BTreeSet<usize> {
        &self.null_support
    }

    /// `ceil(n * Delta)` componentwise: the integral divisor generating the
    /// same sections as `nD`.
    pub fn ceil_scale(&self, n: u64) -> QDivisor {
        let factor = int(n as i64);
        QDivisor::new(
            self.delta
                .coefficients()
                .iter()
                .map(|c| Q::from_integer(ceil_int(&(c * &factor))))
                .collect(),
        )
    }
}

fn check_effective(d: &QDivisor) -> Result<(), ZariskiError> {
    match d.coefficients().iter().position(|c| c.is_negative()) {
        Some(index) => Err(ZariskiError::NotEffective { index }),
        None => Ok(()),
    }
}

/// Solves `pair(D + sum_{E in S} b_E E, E') = 0` for all `E'` in `S`.
///
/// The system matrix is a principal submatrix of the negative-definite gram
/// matrix, hence invertible; `None` only on non-validated input.
fn solve_on_support(
    config: &ExceptionalConfig,
    d: &QDivisor,
    support: &[usize],
) -> Option<QDivisor> {
    let s = config.curve_count();
    if support.is_empty() {
        return Some(QDivisor::zero(s));
    }
    let a: Vec<Vec<Q>> = support
        .iter()
        .map(|&r| support.iter().map(|&c| int(config.gram_entry(r, c))).collect())
        .collect();
    let rhs: Vec<Q> = support
        .iter()
        .map(|&r| -config.pair_with_curve(d, r))
        .collect();
    let b = solve_exact(&a, &rhs)?;
    let mut coeffs = vec![Q::zero(); s];
    for (&i, v) in support.iter().zip(b) {
        coeffs[i] = v;
    }
    Some(QDivisor::new(coeffs))
}

fn finish(
    config: &ExceptionalConfig,
    d: QDivisor,
    b: QDivisor,
) -> Result<ZariskiDecomposition, ZariskiError> {
    if let Some(index) = b.coefficients().iter().position(|c| c.is_negative()) {
        return Err(ZariskiError::InternalInvariantViolation {
            reason: format!("negative correction coefficient at curve {index}"),
        });
    }
    let delta = d.add(&b);
    let null_support = (0..config.curve_count())
        .filter(|&i| config.pair_with_curve(&delta, i).is_zero())
        .collect();
    Ok(ZariskiDecomposition {
        d,
        delta,
        b,
        null_support,
    })
}

/// Computes the Zariski decomposition of an effective divisor.
///
/// Support-growing iteration: starting from the empty set, solve the zero-
/// pairing system on the current support, then add every curve the candidate
/// still pairs positively against. The support grows monotonically, so at most
/// `s` rounds occur.
pub fn decompose(
    config: &ExceptionalConfig,
    d: &QDivisor,
) -> Result<ZariskiDecomposition, ZariskiError> {
    config.pair(d, d)?; // length check
    check_effective(d)?;
    let s = config.curve_count();
    let mut support: BTreeSet<usize> = BTreeSet::new();
    let mut b = QDivisor::zero(s);
    for _round in 0..=s {
        let delta = d.add(&b);
        let violators: Vec<usize> = (0..s)
            .filter(|&i| config.pair_with_curve(&delta, i).is_positive())
            .collect();
        if violators.is_empty() {
            return finish(config, d.clone(), b);
        }
        support.extend(violators);
        let indices: Vec<usize> = support.iter().copied().collect();
        b = solve_on_support(config, d, &indices).ok_or_else(|| {
            ZariskiError::InternalInvariantViolation {
                reason: "singular principal submatrix".to_string(),
            }
        })?;
    }
    Err(ZariskiError::InternalInvariantViolation {
        reason: "support growth did not terminate".to_string(),
    })
}

/// Independent oracle: enumerates all supports, keeps every candidate
/// satisfying the decomposition contract, and returns the coefficient-wise
/// minimal one. Must agree with [`decompose`].
pub fn brute_force_decompose(
    config: &ExceptionalConfig,
    d: &QDivisor,
) -> Result<ZariskiDecomposition, ZariskiError> {
    config.pair(d, d)?;
    check_effective(d)?;
    let s = config.curve_count();
    if s > BRUTE_FORCE_MAX_CURVES {
        return Err(ZariskiError::TooManyCurves {
            count: s,
            max: BRUTE_FORCE_MAX_CURVES,
        });
    }
    let mut candidates: Vec<QDivisor> = Vec::new();
    for mask in 0u32..(1u32 << s) {
        let support: Vec<usize> = (0..s).filter(|&i| mask & (1 << i) != 0).collect();
        let Some(b) = solve_on_support(config, d, &support) else {
            continue;
        };
        if !b.is_effective() {
            continue;
        }
        let delta = d.add(&b);
        if config.is_antinef(&delta)? {
            candidates.push(b);
        }
    }
    let minimal = candidates
        .iter()
        .position(|b| candidates.iter().all(|other| b.le(other)))
        .ok_or_else(|| ZariskiError::InternalInvariantViolation {
            reason: "no coefficient-wise minimal candidate".to_string(),
        })?;
    finish(config, d.clone(), candidates.swap_remove(minimal))
}
