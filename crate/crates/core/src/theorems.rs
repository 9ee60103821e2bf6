//! Verifies the equality and inequality theorems on concrete inputs.
//!
//! The Minkowski inequalities are unconditional: a failing verdict signals a
//! bug, never a data outcome. In dimension two every nontrivial instance of
//! the four inequalities reduces to `e1^2 <= e0 e2`, and inequality 4) is
//! checked through that algebraic equivalence so no square root is ever
//! extracted. Equality classifies the pair: there are coprime positive
//! integers `a, b` with `a Delta_1 = b Delta_2`, the certificate behind
//! `I(naD_1) = I(nbD_2)`.

use crate::config::{ConfigError, ExceptionalConfig, QDivisor};
use crate::multiplicity::{weighted_mixed, MultiplicityError};
use crate::rational::Q;
use crate::zariski::{decompose, ZariskiError};
use num::bigint::BigInt;
use num::Signed;
use thiserror::Error;

/// Certificate depth used by [`rees_check`] when none is given.
pub const DEFAULT_CERTIFICATE_DEPTH: u64 = 50;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("divisor {index} is zero; the report needs nonzero divisors")]
    ZeroDivisor { index: usize },
    #[error("D1 is not dominated by D2 (coefficient {index})")]
    NotDominated { index: usize },
    #[error("curve indices must differ")]
    SameIndex,
    #[error("curve index {index} out of range for {count} curves")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("internal invariant violated: {reason}")]
    InternalInvariantViolation { reason: String },
    #[error(transparent)]
    Multiplicity(#[from] MultiplicityError),
    #[error(transparent)]
    Zariski(#[from] ZariskiError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// Outcome of the Minkowski-equality classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqualityCase {
    Strict,
    /// `e1^2 = e0 e2` with `a/b` the reduced form of `e1/e0`; certifies
    /// `a Delta_1 = b Delta_2` exactly.
    Equality { a: BigInt, b: BigInt },
}

/// Verdicts for the four Minkowski inequalities at `d = 2`.
///
/// 1) log-convexity `e1^2 <= e0 e2`; 2) `e_i e_{2-i} <= e0 e2` for all `i`;
/// 3) `e_{2-i}^2 <= e0^{2-i} e2^i` for all `i`; 4) the Minkowski sum
/// inequality `e(I(1)I(2))^{1/2} <= e0^{1/2} + e2^{1/2}`, checked through the
/// equivalence `e0 + 2 e1 + e2 <= e0 + 2 sqrt(e0 e2) + e2 <=> e1^2 <= e0 e2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinkowskiVerdicts {
    pub log_convexity: bool,
    pub index_products: bool,
    pub index_powers: bool,
    pub minkowski_sum: bool,
}

impl MinkowskiVerdicts {
    pub fn all_hold(&self) -> bool {
        self.log_convexity && self.index_products && self.index_powers && self.minkowski_sum
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinkowskiReport {
    pub e0: Q,
    pub e1: Q,
    pub e2: Q,
    pub verdicts: MinkowskiVerdicts,
    pub equality_case: EqualityCase,
}

/// Computes `(e0, e1, e2)` through the branch-weighted form and checks the
/// four Minkowski inequalities exactly, classifying the equality case.
pub fn minkowski_report(
    config: &ExceptionalConfig,
    d1: &QDivisor,
    d2: &QDivisor,
) -> Result<MinkowskiReport, TheoremError> {
    for (index, d) in [d1, d2].into_iter().enumerate() {
        if d.is_zero() {
            return Err(TheoremError::ZeroDivisor { index });
        }
    }
    let form = weighted_mixed(config, &[d1.clone(), d2.clone()])?;
    let (e0, e1, e2) = form.pair_entries();

    let cross = &e1 * &e1;
    let extreme = &e0 * &e2;
    let holds = cross <= extreme;
    // At d = 2 the index instances of 2) and 3) are either identities
    // (i in {0, 2}) or exactly e1^2 <= e0 e2 (i = 1); 4) is equivalent to the
    // same inequality since e1 >= 0. All four verdicts therefore share the
    // one exact comparison.
    let verdicts = MinkowskiVerdicts {
        log_convexity: holds,
        index_products: holds,
        index_powers: holds,
        minkowski_sum: holds,
    };

    let equality_case = if cross == extreme {
        let ratio = &e1 / &e0;
        let (a, b) = (ratio.numer().clone(), ratio.denom().clone());
        if !a.is_positive() || !b.is_positive() {
            return Err(TheoremError::InternalInvariantViolation {
                reason: "equality ratio e1/e0 is not positive".to_string(),
            });
        }
        let delta1 = &form.deltas()[0];
        let delta2 = &form.deltas()[1];
        let lhs = delta1.scale(&Q::from_integer(a.clone()));
        let rhs = delta2.scale(&Q::from_integer(b.clone()));
        if lhs != rhs {
            return Err(TheoremError::InternalInvariantViolation {
                reason: "equality case without proportional anti-nef parts".to_string(),
            });
        }
        EqualityCase::Equality { a, b }
    } else {
        EqualityCase::Strict
    };

    Ok(MinkowskiReport {
        e0,
        e1,
        e2,
        verdicts,
        equality_case,
    })
}

/// One `ceil(n Delta)` certificate pair of a Rees check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub n: u64,
    pub lhs: QDivisor,
    pub rhs: QDivisor,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesReport {
    pub vol1: Q,
    pub vol2: Q,
    pub volumes_equal: bool,
    pub delta_equal: bool,
    pub certificates: Vec<Certificate>,
}

/// Checks the Rees theorem for a dominated pair `D1 <= D2`: equal volumes
/// force `Delta_1 = Delta_2` and hence equal section ideals, witnessed by the
/// integral certificates `ceil(n Delta)` for `n = 1..=depth`.
pub fn rees_check(
    config: &ExceptionalConfig,
    d1: &QDivisor,
    d2: &QDivisor,
    depth: u64,
) -> Result<ReesReport, TheoremError> {
    config.pair(d1, d2)?;
    if let Some(index) = d1
        .coefficients()
        .iter()
        .zip(d2.coefficients())
        .position(|(a, b)| a > b)
    {
        return Err(TheoremError::NotDominated { index });
    }
    let z1 = decompose(config, d1)?;
    let z2 = decompose(config, d2)?;
    let vol1 = -config.pair(z1.delta(), z1.delta())?;
    let vol2 = -config.pair(z2.delta(), z2.delta())?;
    let volumes_equal = vol1 == vol2;
    let delta_equal = z1.delta() == z2.delta();
    if volumes_equal && !delta_equal {
        return Err(TheoremError::InternalInvariantViolation {
            reason: "equal volumes with distinct anti-nef parts".to_string(),
        });
    }
    let certificates = (1..=depth)
        .map(|n| {
            let lhs = z1.ceil_scale(n);
            let rhs = z2.ceil_scale(n);
            let equal = lhs == rhs;
            Certificate { n, lhs, rhs, equal }
        })
        .collect();
    Ok(ReesReport {
        vol1,
        vol2,
        volumes_equal,
        delta_equal,
        certificates,
    })
}

/// Runs the Minkowski classifier on two distinct prime divisors of a
/// single-branch configuration; the outcome must be strict (equality would
/// force the two valuations to coincide).
pub fn prime_distinctness(
    config: &ExceptionalConfig,
    i: usize,
    j: usize,
) -> Result<MinkowskiReport, TheoremError> {
    let count = config.curve_count();
    if i == j {
        return Err(TheoremError::SameIndex);
    }
    for index in [i, j] {
        if index >= count {
            return Err(TheoremError::IndexOutOfRange { index, count });
        }
    }
    let report = minkowski_report(
        config,
        &QDivisor::curve(i, count),
        &QDivisor::curve(j, count),
    )?;
    if report.equality_case != EqualityCase::Strict {
        return Err(TheoremError::InternalInvariantViolation {
            reason: format!("prime divisors {i} and {j} classified as proportional"),
        });
    }
    Ok(report)
}

/// The gamma candidates of a divisor: the coefficients of its anti-nef part.
///
/// The identification of `gamma_E(D) = inf tau_m / m` with the coefficient of
/// `Delta` is validated empirically against oracle tau-sequences, not proved;
/// the flag records that status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector {
    pub values: Vec<Q>,
    /// Always true: the identification is a tested conjecture, not a theorem.
    pub conjectural: bool,
}

/// Returns the coefficient vector of `Delta`, labeled as the gamma candidates.
pub fn gamma(config: &ExceptionalConfig, d: &QDivisor) -> Result<GammaVector, TheoremError> {
    let z = decompose(config, d)?;
    Ok(GammaVector {
        values: z.delta().coefficients().to_vec(),
        conjectural: true,
    })
}
