//! Exact rational scalars.
//!
//! Everything on the intersection-theory side of the crate is computed over
//! arbitrary-precision rationals; no floating point enters until the oracle's
//! least-squares fits. Rationals cross the serialization boundary as strings
//! `"p/q"` (or `"p"` when the denominator is 1), always in lowest terms with a
//! positive denominator.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

/// The scalar type of the crate: an arbitrary-precision rational number.
pub type Q = BigRational;

/// Shorthand for `p/q` as a [`Q`].
///
/// Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer as a [`Q`].
pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Smallest integer `>= x`.
pub fn ceil_int(x: &Q) -> BigInt {
    x.ceil().to_integer()
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid rational literal {literal:?}: {reason}")]
pub struct ParseRationalError {
    pub literal: String,
    pub reason: String,
}

/// Parses `"p"` or `"p/q"` into a reduced rational with positive denominator.
pub fn parse_rational(s: &str) -> Result<Q, ParseRationalError> {
    let err = |reason: &str| ParseRationalError {
        literal: s.to_string(),
        reason: reason.to_string(),
    };
    let mut parts = s.splitn(2, '/');
    let num_part = parts.next().unwrap_or("").trim();
    let num: BigInt = num_part.parse().map_err(|_| err("numerator is not an integer"))?;
    match parts.next() {
        None => Ok(Q::from_integer(num)),
        Some(den_part) => {
            let den: BigInt = den_part
                .trim()
                .parse()
                .map_err(|_| err("denominator is not an integer"))?;
            if den.is_zero() {
                return Err(err("denominator is zero"));
            }
            Ok(Q::new(num, den))
        }
    }
}

/// Renders a rational in lowest terms, `"p"` for integers and `"p/q"` (q > 0)
/// otherwise. Inverse of [`parse_rational`].
pub fn format_rational(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Solves the square system `a x = rhs` by Gaussian elimination over `Q`.
///
/// Returns `None` when the matrix is singular. `a` is row-major, `n x n`.
pub fn solve_exact(a: &[Vec<Q>], rhs: &[Q]) -> Option<Vec<Q>> {
    let n = rhs.len();
    debug_assert!(a.len() == n && a.iter().all(|row| row.len() == n));
    let mut m: Vec<Vec<Q>> = a.to_vec();
    let mut b: Vec<Q> = rhs.to_vec();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        b.swap(col, pivot);
        let inv = m[col][col].recip();
        for c in col..n {
            let v = &m[col][c] * &inv;
            m[col][c] = v;
        }
        let bv = &b[col] * &inv;
        b[col] = bv;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..n {
                let v = &m[r][c] - &factor * &m[col][c];
                m[r][c] = v;
            }
            let bv = &b[r] - &factor * &b[col];
            b[r] = bv;
        }
    }
    Some(b)
}

/// Signs of the leading principal minors of a symmetric integer matrix,
/// computed exactly by fraction-free (Bareiss) elimination.
///
/// Returns `sign(det A_k)` for `k = 1..=n` in order, stopping early with a
/// trailing `0` if a minor vanishes (later minors are then not computed).
pub fn leading_minor_signs(a: &[Vec<i64>]) -> Vec<i8> {
    let n = a.len();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut signs = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = m[k][k].clone();
        signs.push(if pivot.is_zero() {
            0
        } else if pivot.is_negative() {
            -1
        } else {
            1
        });
        if pivot.is_zero() {
            break;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = (&m[i][j] * &pivot - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = pivot;
    }
    signs
}
