//! Exceptional configurations and rational divisors.
//!
//! An [`ExceptionalConfig`] is the weighted dual graph of the exceptional
//! fiber of a resolution of a two-dimensional singularity: curves, their exact
//! integer intersection matrix, and a partition of the curves into branches
//! (one per maximal ideal of the normalization) with a positive residue-degree
//! weight per branch. Construction validates the standing hypotheses, the
//! essential one being that the intersection form is negative definite;
//! everything downstream relies on it.
//!
//! A [`QDivisor`] is an exact rational coefficient vector over the curves of a
//! fixed configuration.

use crate::rational::{int, leading_minor_signs, Q};
use num::{Signed, Zero};
use std::fmt;
use thiserror::Error;

/// A single violated invariant of a would-be configuration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigViolation {
    #[error("matrix is not symmetric at ({i},{j})")]
    AsymmetricMatrix { i: usize, j: usize },
    #[error("diagonal entry (E{i}^2) = {value} is not negative")]
    PositiveDiagonal { i: usize, value: i64 },
    #[error("off-diagonal entry at ({i},{j}) is negative")]
    NegativeOffDiagonal { i: usize, j: usize },
    #[error("intersection matrix is not negative definite (leading minor of order {order})")]
    NotNegativeDefinite { order: usize },
    #[error("curves {i} and {j} of different branches intersect")]
    CrossBranchIntersection { i: usize, j: usize },
    #[error("branch {branch} is not connected")]
    DisconnectedBranch { branch: usize },
    #[error("matrix is not square or does not match the curve count")]
    MalformedMatrix,
    #[error("branches are not a partition of the curve indices into non-empty groups: {reason}")]
    InvalidBranchPartition { reason: String },
}

/// All invariant violations found in one candidate configuration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ValidationError {
    pub violations: Vec<ConfigViolation>,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid configuration:")?;
        for v in &self.violations {
            write!(f, " {v};")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("divisor has {got} coefficients but the configuration has {expected} curves")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Validated weighted dual graph. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalConfig {
    curve_labels: Vec<String>,
    gram: Vec<Vec<i64>>,
    branches: Vec<Vec<usize>>,
    branch_weights: Vec<u64>,
}

impl ExceptionalConfig {
    /// Builds a configuration, validating every invariant. On failure reports
    /// the full list of violations, not just the first.
    pub fn new(
        curve_labels: Vec<String>,
        gram: Vec<Vec<i64>>,
        branches: Vec<Vec<usize>>,
        branch_weights: Vec<u64>,
    ) -> Result<Self, ValidationError> {
        let violations = validate_parts(&curve_labels, &gram, &branches);
        if violations.is_empty() {
            Ok(Self {
                curve_labels,
                gram,
                branches,
                branch_weights,
            })
        } else {
            Err(ValidationError { violations })
        }
    }

    /// Single-branch configuration with default labels `E1..Es` and weight 1.
    pub fn single_branch(gram: Vec<Vec<i64>>) -> Result<Self, ValidationError> {
        let s = gram.len();
        let labels = (1..=s).map(|i| format!("E{i}")).collect();
        Self::new(labels, gram, vec![(0..s).collect()], vec![1])
    }

    pub fn curve_count(&self) -> usize {
        self.curve_labels.len()
    }

    pub fn curve_labels(&self) -> &[String] {
        &self.curve_labels
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn gram_entry(&self, i: usize, j: usize) -> i64 {
        self.gram[i][j]
    }

    pub fn branches(&self) -> &[Vec<usize>] {
        &self.branches
    }

    pub fn branch_weights(&self) -> &[u64] {
        &self.branch_weights
    }

    pub fn is_single_branch(&self) -> bool {
        self.branches.len() == 1
    }

    fn check_len(&self, d: &QDivisor) -> Result<(), ConfigError> {
        if d.len() == self.curve_count() {
            Ok(())
        } else {
            Err(ConfigError::DimensionMismatch {
                expected: self.curve_count(),
                got: d.len(),
            })
        }
    }

    /// The intersection pairing `D1 . D2 = D1^T gram D2`, exact.
    pub fn pair(&self, d1: &QDivisor, d2: &QDivisor) -> Result<Q, ConfigError> {
        self.check_len(d1)?;
        self.check_len(d2)?;
        let mut acc = Q::zero();
        for (i, a) in d1.coefficients().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut row = Q::zero();
            for (j, b) in d2.coefficients().iter().enumerate() {
                let g = self.gram[i][j];
                if g == 0 || b.is_zero() {
                    continue;
                }
                row += int(g) * b;
            }
            acc += a * row;
        }
        Ok(acc)
    }

    /// `D . E_i` for a single curve; length must already match.
    pub fn pair_with_curve(&self, d: &QDivisor, i: usize) -> Q {
        debug_assert_eq!(d.len(), self.curve_count());
        let mut acc = Q::zero();
        for (j, c) in d.coefficients().iter().enumerate() {
            let g = self.gram[j][i];
            if g == 0 || c.is_zero() {
                continue;
            }
            acc += int(g) * c;
        }
        acc
    }

    /// True iff `D . E_i <= 0` for every curve.
    pub fn is_antinef(&self, d: &QDivisor) -> Result<bool, ConfigError> {
        self.check_len(d)?;
        Ok((0..self.curve_count()).all(|i| !self.pair_with_curve(d, i).is_positive()))
    }
}

/// Validates the raw parts of a configuration, returning every violated
/// invariant. An empty report means the configuration is valid.
pub fn validate_config(
    curve_labels: &[String],
    gram: &[Vec<i64>],
    branches: &[Vec<usize>],
) -> Vec<ConfigViolation> {
    validate_parts(curve_labels, gram, branches)
}

fn validate_parts(
    curve_labels: &[String],
    gram: &[Vec<i64>],
    branches: &[Vec<usize>],
) -> Vec<ConfigViolation> {
    let mut out = Vec::new();
    let s = curve_labels.len();
    if gram.len() != s || gram.iter().any(|row| row.len() != s) {
        out.push(ConfigViolation::MalformedMatrix);
        return out;
    }

    for i in 0..s {
        for j in 0..s {
            if j > i && gram[i][j] != gram[j][i] {
                out.push(ConfigViolation::AsymmetricMatrix { i, j });
            }
            if i == j && gram[i][i] >= 0 {
                out.push(ConfigViolation::PositiveDiagonal { i, value: gram[i][i] });
            }
            if i < j && gram[i][j] < 0 {
                out.push(ConfigViolation::NegativeOffDiagonal { i, j });
            }
        }
    }

    // Sign test on exact leading principal minors: (-1)^k for k = 1..=s.
    let signs = leading_minor_signs(gram);
    for (k, sign) in signs.iter().enumerate() {
        let expected: i8 = if k % 2 == 0 { -1 } else { 1 };
        if *sign != expected {
            out.push(ConfigViolation::NotNegativeDefinite { order: k + 1 });
            break;
        }
    }

    // Branch partition: non-empty groups covering 0..s exactly once.
    let mut owner = vec![usize::MAX; s];
    let mut partition_ok = true;
    for (b, group) in branches.iter().enumerate() {
        if group.is_empty() {
            out.push(ConfigViolation::InvalidBranchPartition {
                reason: format!("branch {b} is empty"),
            });
            partition_ok = false;
        }
        for &i in group {
            if i >= s {
                out.push(ConfigViolation::InvalidBranchPartition {
                    reason: format!("curve index {i} out of range"),
                });
                partition_ok = false;
            } else if owner[i] != usize::MAX {
                out.push(ConfigViolation::InvalidBranchPartition {
                    reason: format!("curve {i} appears in two branches"),
                });
                partition_ok = false;
            } else {
                owner[i] = b;
            }
        }
    }
    if partition_ok {
        if let Some(i) = owner.iter().position(|&b| b == usize::MAX) {
            out.push(ConfigViolation::InvalidBranchPartition {
                reason: format!("curve {i} belongs to no branch"),
            });
            partition_ok = false;
        }
    }

    if partition_ok {
        for i in 0..s {
            for j in (i + 1)..s {
                if owner[i] != owner[j] && gram[i][j] != 0 {
                    out.push(ConfigViolation::CrossBranchIntersection { i, j });
                }
            }
        }
        for (b, group) in branches.iter().enumerate() {
            if !branch_connected(gram, group) {
                out.push(ConfigViolation::DisconnectedBranch { branch: b });
            }
        }
    }

    out
}

fn branch_connected(gram: &[Vec<i64>], group: &[usize]) -> bool {
    if group.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; group.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(p) = stack.pop() {
        for (q, flag) in seen.iter_mut().enumerate() {
            if !*flag && gram[group[p]][group[q]] > 0 {
                *flag = true;
                stack.push(q);
            }
        }
    }
    seen.into_iter().all(|v| v)
}

/// Exact rational coefficient vector over the curves of a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QDivisor {
    coefficients: Vec<Q>,
}

impl QDivisor {
    pub fn new(coefficients: Vec<Q>) -> Self {
        Self { coefficients }
    }

    /// The zero divisor on `len` curves.
    pub fn zero(len: usize) -> Self {
        Self {
            coefficients: vec![Q::zero(); len],
        }
    }

    /// The prime divisor `E_i` on `len` curves.
    pub fn curve(i: usize, len: usize) -> Self {
        let mut coefficients = vec![Q::zero(); len];
        coefficients[i] = int(1);
        Self { coefficients }
    }

    /// Builds a divisor from integer coefficients.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self {
            coefficients: coeffs.iter().map(|&c| int(c)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficients(&self) -> &[Q] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> &Q {
        &self.coefficients[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_zero())
    }

    /// All coefficients `>= 0`.
    pub fn is_effective(&self) -> bool {
        self.coefficients.iter().all(|c| !c.is_negative())
    }

    /// All coefficients integers.
    pub fn is_integral(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_integer())
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self {
            coefficients: self.coefficients.iter().map(|a| a * c).collect(),
        }
    }

    /// Support: indices of nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Restriction to one branch: coefficients kept on `branch`, zero elsewhere.
    pub fn restrict(&self, branch: &[usize]) -> Self {
        let mut coefficients = vec![Q::zero(); self.len()];
        for &i in branch {
            coefficients[i] = self.coefficients[i].clone();
        }
        Self { coefficients }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn cfg(gram: Vec<Vec<i64>>) -> ExceptionalConfig {
        ExceptionalConfig::single_branch(gram).unwrap()
    }

    #[test]
    fn single_minus_one_curve_is_valid() {
        assert!(ExceptionalConfig::single_branch(vec![vec![-1]]).is_ok());
    }

    #[test]
    fn a2_is_valid() {
        // Principal minors -2, 3 have signs (-1)^1, (-1)^2.
        assert!(ExceptionalConfig::single_branch(vec![vec![-2, 1], vec![1, -2]]).is_ok());
    }

    #[test]
    fn degenerate_matrix_is_rejected() {
        let err = ExceptionalConfig::single_branch(vec![vec![-2, 2], vec![2, -2]]).unwrap_err();
        assert!(err
            .violations
            .contains(&ConfigViolation::NotNegativeDefinite { order: 2 }));
    }

    #[test]
    fn negative_off_diagonal_is_rejected() {
        let err = ExceptionalConfig::single_branch(vec![vec![-2, -1], vec![-1, -2]]).unwrap_err();
        assert!(err
            .violations
            .contains(&ConfigViolation::NegativeOffDiagonal { i: 0, j: 1 }));
    }

    #[test]
    fn asymmetric_and_positive_diagonal_are_reported_together() {
        let err = ExceptionalConfig::single_branch(vec![vec![1, 2], vec![0, -2]]).unwrap_err();
        assert!(err
            .violations
            .contains(&ConfigViolation::AsymmetricMatrix { i: 0, j: 1 }));
        assert!(err
            .violations
            .contains(&ConfigViolation::PositiveDiagonal { i: 0, value: 1 }));
    }

    #[test]
    fn cross_branch_intersection_is_rejected() {
        let err = ExceptionalConfig::new(
            vec!["E1".into(), "E2".into()],
            vec![vec![-2, 1], vec![1, -2]],
            vec![vec![0], vec![1]],
            vec![1, 1],
        )
        .unwrap_err();
        assert!(err
            .violations
            .contains(&ConfigViolation::CrossBranchIntersection { i: 0, j: 1 }));
    }

    #[test]
    fn disconnected_branch_is_rejected() {
        let err = ExceptionalConfig::new(
            vec!["E1".into(), "E2".into()],
            vec![vec![-1, 0], vec![0, -1]],
            vec![vec![0, 1]],
            vec![1],
        )
        .unwrap_err();
        assert!(err
            .violations
            .contains(&ConfigViolation::DisconnectedBranch { branch: 0 }));
    }

    #[test]
    fn two_disjoint_branches_are_valid() {
        assert!(ExceptionalConfig::new(
            vec!["E".into(), "F".into()],
            vec![vec![-1, 0], vec![0, -1]],
            vec![vec![0], vec![1]],
            vec![1, 2],
        )
        .is_ok());
    }

    #[test]
    fn malformed_partition_is_rejected() {
        let err = ExceptionalConfig::new(
            vec!["E1".into(), "E2".into()],
            vec![vec![-2, 1], vec![1, -2]],
            vec![vec![0]],
            vec![1],
        )
        .unwrap_err();
        assert!(matches!(
            err.violations[0],
            ConfigViolation::InvalidBranchPartition { .. }
        ));
    }

    #[test]
    fn pairing_matches_hand_expansion() {
        let c = cfg(vec![vec![-2, 1], vec![1, -1]]);
        let e1e2 = QDivisor::from_integers(&[1, 1]);
        // (E1+E2)^2 = -2 + 2 - 1 = -1
        assert_eq!(c.pair(&e1e2, &e1e2).unwrap(), int(-1));
        let a2 = cfg(vec![vec![-2, 1], vec![1, -2]]);
        let e1 = QDivisor::curve(0, 2);
        let e2 = QDivisor::curve(1, 2);
        assert_eq!(a2.pair(&e1, &e2).unwrap(), int(1));
        // Pairing with zero divisor vanishes.
        assert_eq!(a2.pair(&QDivisor::zero(2), &e1).unwrap(), int(0));
    }

    #[test]
    fn pairing_dimension_mismatch() {
        let c = cfg(vec![vec![-1]]);
        let d = QDivisor::from_integers(&[1, 2]);
        assert_eq!(
            c.pair(&d, &d),
            Err(ConfigError::DimensionMismatch { expected: 1, got: 2 })
        );
    }

    #[test]
    fn antinef_checks() {
        let c = cfg(vec![vec![-2, 1], vec![1, -1]]);
        assert!(c.is_antinef(&QDivisor::from_integers(&[1, 1])).unwrap());
        assert!(!c.is_antinef(&QDivisor::curve(0, 2)).unwrap());
        assert!(c.is_antinef(&QDivisor::zero(2)).unwrap());
    }

    #[test]
    fn divisor_predicates() {
        let d = QDivisor::new(vec![frac(1, 2), int(0)]);
        assert!(d.is_effective());
        assert!(!d.is_integral());
        assert!(!d.is_zero());
        assert_eq!(d.support(), vec![0]);
        let e = QDivisor::new(vec![int(1), int(0)]);
        assert!(d.le(&e));
        assert!(!e.le(&d));
    }
}
