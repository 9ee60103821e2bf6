//! Volumes, mixed multiplicities and the multiplicity polynomial.
//!
//! In dimension two every multiplicity is an intersection number of anti-nef
//! parts: the volume of an effective divisor `D` is `-(Delta^2)`, the mixed
//! multiplicity of a pair is `-(Delta_i . Delta_j)`, and the limit polynomial
//! of a tuple is `G(n) = -1/2 ((n_1 Delta_1 + ... + n_r Delta_r)^2)`. The
//! branch-weighted variant sums the same numbers over branches against the
//! residue degrees.

use crate::config::{ConfigError, ExceptionalConfig, QDivisor};
use crate::rational::{frac, int, Q};
use crate::zariski::{decompose, ZariskiError};
use num::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiplicityError {
    #[error("divisor {index} is not effective")]
    NotEffective { index: usize },
    #[error("branch weights are invalid: {reason}")]
    WeightMismatch { reason: String },
    #[error(transparent)]
    Zariski(#[from] ZariskiError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// The symmetric matrix `e(i,j) = -(Delta_i . Delta_j)` of a divisor tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedMultiplicityForm {
    divisors: Vec<QDivisor>,
    deltas: Vec<QDivisor>,
    matrix: Vec<Vec<Q>>,
    weights_applied: bool,
}

impl MixedMultiplicityForm {
    /// Number of divisors `r`.
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn divisors(&self) -> &[QDivisor] {
        &self.divisors
    }

    /// Anti-nef parts of the whole-divisor decompositions.
    pub fn deltas(&self) -> &[QDivisor] {
        &self.deltas
    }

    pub fn matrix(&self) -> &[Vec<Q>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Q {
        &self.matrix[i][j]
    }

    pub fn weights_applied(&self) -> bool {
        self.weights_applied
    }

    /// `(e0, e1, e2)` for a pair (`r = 2`).
    pub fn pair_entries(&self) -> (Q, Q, Q) {
        assert_eq!(self.size(), 2, "pair_entries needs exactly two divisors");
        (
            self.matrix[0][0].clone(),
            self.matrix[0][1].clone(),
            self.matrix[1][1].clone(),
        )
    }
}

/// The degree-2 homogeneous polynomial `G`, stored as a coefficient table
/// `b_k` over all exponent tuples `k` with `|k| = 2`, where
/// `b_k = e(type k) / (k_1! ... k_r!)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityPolynomial {
    terms: Vec<(Vec<u32>, Q)>,
}

impl MultiplicityPolynomial {
    /// Coefficient table in the order of [`degree_two_exponents`].
    pub fn terms(&self) -> &[(Vec<u32>, Q)] {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Option<&Q> {
        self.terms
            .iter()
            .find(|(k, _)| k.as_slice() == exponents)
            .map(|(_, c)| c)
    }

    /// Evaluates `G` at a rational point.
    pub fn eval(&self, point: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (exponents, coeff) in &self.terms {
            debug_assert_eq!(exponents.len(), point.len());
            let mut term = coeff.clone();
            for (k, x) in exponents.iter().zip(point) {
                for _ in 0..*k {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    pub fn eval_integers(&self, point: &[i64]) -> Q {
        let qpoint: Vec<Q> = point.iter().map(|&n| int(n)).collect();
        self.eval(&qpoint)
    }
}

/// All exponent tuples `(k_1, ..., k_r)` with `k_1 + ... + k_r = 2`, in
/// lexicographically decreasing order. Shared by the exact polynomial and the
/// oracle's coefficient solver so the two report in the same order.
pub fn degree_two_exponents(r: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for i in 0..r {
        let mut sq = vec![0u32; r];
        sq[i] = 2;
        out.push(sq);
        for j in (i + 1)..r {
            let mut cross = vec![0u32; r];
            cross[i] = 1;
            cross[j] = 1;
            out.push(cross);
        }
    }
    out
}

fn check_effective(divisors: &[QDivisor]) -> Result<(), MultiplicityError> {
    match divisors.iter().position(|d| !d.is_effective()) {
        Some(index) => Err(MultiplicityError::NotEffective { index }),
        None => Ok(()),
    }
}

/// `Vol(D) = -(Delta^2)`, the multiplicity of the divisorial filtration of `D`.
pub fn volume(config: &ExceptionalConfig, d: &QDivisor) -> Result<Q, MultiplicityError> {
    check_effective(std::slice::from_ref(d))?;
    let delta = decompose(config, d)?.delta().clone();
    Ok(-config.pair(&delta, &delta)?)
}

fn form_from_deltas(
    config: &ExceptionalConfig,
    divisors: Vec<QDivisor>,
    deltas: Vec<QDivisor>,
    weights_applied: bool,
    weights: Option<&[u64]>,
) -> Result<MixedMultiplicityForm, MultiplicityError> {
    let r = deltas.len();
    let mut matrix = vec![vec![Q::zero(); r]; r];
    for i in 0..r {
        for j in i..r {
            let value = match weights {
                None => -config.pair(&deltas[i], &deltas[j])?,
                Some(ws) => {
                    // Cross-branch gram entries vanish, so the pairing splits
                    // as a sum over branches; weight each branch term.
                    let mut acc = Q::zero();
                    for (branch, &w) in config.branches().iter().zip(ws) {
                        let di = deltas[i].restrict(branch);
                        let dj = deltas[j].restrict(branch);
                        acc += int(w as i64) * -config.pair(&di, &dj)?;
                    }
                    acc
                }
            };
            matrix[i][j] = value.clone();
            matrix[j][i] = value;
        }
    }
    Ok(MixedMultiplicityForm {
        divisors,
        deltas,
        matrix,
        weights_applied,
    })
}

/// Mixed multiplicity matrix `e(i,j) = -(Delta_i . Delta_j)`; the diagonal is
/// the volumes.
pub fn mixed_form(
    config: &ExceptionalConfig,
    divisors: &[QDivisor],
) -> Result<MixedMultiplicityForm, MultiplicityError> {
    check_effective(divisors)?;
    let deltas = divisors
        .iter()
        .map(|d| Ok(decompose(config, d)?.delta().clone()))
        .collect::<Result<Vec<_>, MultiplicityError>>()?;
    form_from_deltas(config, divisors.to_vec(), deltas, false, None)
}

/// Branch-weighted mixed multiplicity matrix,
/// `e(i,j) = sum_branches -w_branch (Delta_i . Delta_j)|_branch`.
///
/// Because the decomposition respects the branch splitting (cross-branch
/// intersections vanish), the whole-divisor anti-nef parts restrict to the
/// per-branch ones.
pub fn weighted_mixed(
    config: &ExceptionalConfig,
    divisors: &[QDivisor],
) -> Result<MixedMultiplicityForm, MultiplicityError> {
    check_effective(divisors)?;
    let weights = config.branch_weights();
    if weights.len() != config.branches().len() {
        return Err(MultiplicityError::WeightMismatch {
            reason: format!(
                "{} weights for {} branches",
                weights.len(),
                config.branches().len()
            ),
        });
    }
    if let Some(b) = weights.iter().position(|&w| w == 0) {
        return Err(MultiplicityError::WeightMismatch {
            reason: format!("weight of branch {b} is zero; weights must be positive"),
        });
    }
    let deltas = divisors
        .iter()
        .map(|d| Ok(decompose(config, d)?.delta().clone()))
        .collect::<Result<Vec<_>, MultiplicityError>>()?;
    form_from_deltas(config, divisors.to_vec(), deltas, true, Some(weights))
}

/// Expands `G(n_1,...,n_r) = -1/2 ((sum n_i Delta_i)^2)` into its coefficient
/// table; for `r = 2` the coefficients are `(e0/2, e1, e2/2)`.
pub fn mixed_polynomial(
    config: &ExceptionalConfig,
    divisors: &[QDivisor],
) -> Result<MultiplicityPolynomial, MultiplicityError> {
    let form = mixed_form(config, divisors)?;
    Ok(polynomial_from_form(&form))
}

/// The coefficient table of `G` determined by a mixed multiplicity form via
/// the factorial rule `b_k = e(type k)/(k_1!...k_r!)`.
pub fn polynomial_from_form(form: &MixedMultiplicityForm) -> MultiplicityPolynomial {
    let r = form.size();
    let terms = degree_two_exponents(r)
        .into_iter()
        .map(|exponents| {
            let coeff = match exponents.iter().position(|&k| k == 2) {
                Some(i) => frac(1, 2) * form.entry(i, i),
                None => {
                    let mut ones = exponents.iter().enumerate().filter(|(_, &k)| k == 1);
                    let i = ones.next().expect("degree-2 tuple").0;
                    let j = ones.next().expect("degree-2 tuple").0;
                    form.entry(i, j).clone()
                }
            };
            (exponents, coeff)
        })
        .collect();
    MultiplicityPolynomial { terms }
}

/// `e_R(I(1)I(2); R) = 2 G(1,1) = e0 + 2 e1 + e2`.
pub fn product_multiplicity(
    config: &ExceptionalConfig,
    d1: &QDivisor,
    d2: &QDivisor,
) -> Result<Q, MultiplicityError> {
    let form = mixed_form(config, &[d1.clone(), d2.clone()])?;
    let (e0, e1, e2) = form.pair_entries();
    Ok(e0 + int(2) * e1 + e2)
}
