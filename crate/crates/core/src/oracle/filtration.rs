//! Divisorial filtrations in the monomial model, tau-sequences, and the
//! truncation construction.
//!
//! A filtration spec is a list of (valuation, coefficient) terms with
//! `I_n = cap_k I(v_k)_{n c_k}`, the monomial realization of the valuation
//! ideals of an exceptional divisor `sum c_k E_k`.

use crate::oracle::monomial::{val_ideal, MonomialIdeal, MonomialValuation};
use crate::oracle::OracleError;

/// A monomial divisorial filtration: `I_n = cap_k I(v_k)_{n c_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleFiltrationSpec {
    terms: Vec<(MonomialValuation, u64)>,
}

impl OracleFiltrationSpec {
    /// At least one coefficient must be positive.
    pub fn new(terms: Vec<(MonomialValuation, u64)>) -> Result<Self, OracleError> {
        if terms.iter().all(|&(_, c)| c == 0) {
            return Err(OracleError::EmptySpec);
        }
        Ok(Self { terms })
    }

    /// Single-term filtration `I_n = I(v)_n`.
    pub fn single(v: MonomialValuation) -> Self {
        Self { terms: vec![(v, 1)] }
    }

    pub fn terms(&self) -> &[(MonomialValuation, u64)] {
        &self.terms
    }
}

/// The `n`-th ideal of the filtration.
pub fn filtration_ideal(spec: &OracleFiltrationSpec, n: u64) -> MonomialIdeal {
    let mut acc = MonomialIdeal::unit();
    for &(v, c) in spec.terms() {
        let level = n.checked_mul(c).expect("filtration level overflow");
        if level == 0 {
            continue;
        }
        acc = acc.intersect(&val_ideal(&v, level));
    }
    acc
}

/// `tau_m = min { v_target(f) : f in I_m }` for `m = 1..=m_max`.
///
/// The minimum over the ideal is attained on a generator.
pub fn tau_sequence(
    spec: &OracleFiltrationSpec,
    target: &MonomialValuation,
    m_max: u64,
) -> Vec<u64> {
    (1..=m_max)
        .map(|m| filtration_ideal(spec, m).min_valuation(target))
        .collect()
}

/// The `a`-th truncated filtration: `I_{a,n} = I_n` for `n <= a`, and for
/// `n > a` the ideal sum of all products `I_{a,p} I_{a,q}` with `p + q = n`,
/// `p, q > 0`. Memoizes levels as they are requested.
#[derive(Debug, Clone)]
pub struct TruncatedFiltration {
    spec: OracleFiltrationSpec,
    level: u64,
    memo: Vec<MonomialIdeal>,
}

/// Builds the truncation generator at level `a >= 1`.
pub fn truncate(spec: &OracleFiltrationSpec, a: u64) -> TruncatedFiltration {
    assert!(a >= 1, "truncation level must be positive");
    TruncatedFiltration {
        spec: spec.clone(),
        level: a,
        memo: vec![MonomialIdeal::unit()],
    }
}

impl TruncatedFiltration {
    pub fn level(&self) -> u64 {
        self.level
    }

    /// `I_{a,n}`, computing and caching all lower levels as needed.
    pub fn ideal(&mut self, n: u64) -> MonomialIdeal {
        let n = n as usize;
        while self.memo.len() <= n {
            let next = self.memo.len() as u64;
            let ideal = if next <= self.level {
                filtration_ideal(&self.spec, next)
            } else {
                let mut acc: Option<MonomialIdeal> = None;
                for p in 1..=(next / 2) {
                    let q = next - p;
                    let prod = self.memo[p as usize].product(&self.memo[q as usize]);
                    acc = Some(match acc {
                        None => prod,
                        Some(sum) => sum.sum(&prod),
                    });
                }
                acc.expect("n > a >= 1 always has a split")
            };
            self.memo.push(ideal);
        }
        self.memo[n].clone()
    }

    /// Colengths of `I_{a,1} ..= I_{a,m_max}`.
    pub fn colengths(&mut self, m_max: u64) -> Result<Vec<u64>, OracleError> {
        (1..=m_max).map(|m| self.ideal(m).colength()).collect()
    }
}
