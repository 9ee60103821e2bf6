//! Monomial valuations and staircase ideals in two variables.
//!
//! A monomial ideal is stored as its minimal generating antichain, sorted by
//! first exponent with strictly decreasing second exponent. Colength is the
//! number of lattice points under the staircase, counted column by column.

use crate::oracle::OracleError;
use std::fmt;

/// The monomial valuation with `v(x) = a`, `v(y) = b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialValuation {
    a: u64,
    b: u64,
}

impl MonomialValuation {
    pub fn new(a: u64, b: u64) -> Result<Self, OracleError> {
        if a == 0 || b == 0 {
            return Err(OracleError::NonPositiveValuation { a, b });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Divisorial (an `m_R`-valuation) exactly when `gcd(a, b) = 1`.
    pub fn is_primitive(&self) -> bool {
        gcd(self.a, self.b) == 1
    }

    /// Content `g` and primitive part: `v = g * v_{a/g, b/g}`.
    pub fn primitive_part(&self) -> (u64, MonomialValuation) {
        let g = gcd(self.a, self.b);
        (
            g,
            MonomialValuation {
                a: self.a / g,
                b: self.b / g,
            },
        )
    }

    /// `v(x^i y^j) = a i + b j`.
    pub fn value(&self, point: (u64, u64)) -> u64 {
        self.a
            .checked_mul(point.0)
            .and_then(|ai| self.b.checked_mul(point.1).and_then(|bj| ai.checked_add(bj)))
            .expect("valuation value overflow")
    }
}

impl fmt::Display for MonomialValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nu({},{})", self.a, self.b)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// A monomial ideal in two variables: a finite antichain of exponent pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<(u64, u64)>,
}

impl MonomialIdeal {
    /// Minimalizes arbitrary generators into an antichain.
    pub fn from_generators(points: impl IntoIterator<Item = (u64, u64)>) -> Self {
        Self {
            gens: minimalize(points.into_iter().collect()),
        }
    }

    /// The unit ideal, generated by 1.
    pub fn unit() -> Self {
        Self { gens: vec![(0, 0)] }
    }

    pub fn is_unit(&self) -> bool {
        self.gens == [(0, 0)]
    }

    /// Generators sorted by first exponent ascending (second strictly
    /// descending).
    pub fn generators(&self) -> &[(u64, u64)] {
        &self.gens
    }

    /// Membership of `x^i y^j`: dominated by some generator.
    pub fn contains(&self, point: (u64, u64)) -> bool {
        self.gens
            .iter()
            .any(|&(a, b)| a <= point.0 && b <= point.1)
    }

    /// Containment of ideals: every generator of `self` lies in `other`.
    pub fn is_subideal_of(&self, other: &Self) -> bool {
        self.gens.iter().all(|&g| other.contains(g))
    }

    /// Finite colength iff some generator is a pure `x`-power and some is a
    /// pure `y`-power.
    pub fn is_primary(&self) -> bool {
        self.gens.iter().any(|&(_, b)| b == 0) && self.gens.iter().any(|&(a, _)| a == 0)
    }

    /// Intersection: componentwise max over generator pairs, minimalized.
    pub fn intersect(&self, other: &Self) -> Self {
        let points = self
            .gens
            .iter()
            .flat_map(|&(a1, b1)| {
                other
                    .gens
                    .iter()
                    .map(move |&(a2, b2)| (a1.max(a2), b1.max(b2)))
            })
            .collect();
        Self {
            gens: minimalize(points),
        }
    }

    /// Product: componentwise sums over generator pairs, minimalized.
    pub fn product(&self, other: &Self) -> Self {
        let points = self
            .gens
            .iter()
            .flat_map(|&(a1, b1)| {
                other.gens.iter().map(move |&(a2, b2)| {
                    (
                        a1.checked_add(a2).expect("exponent overflow"),
                        b1.checked_add(b2).expect("exponent overflow"),
                    )
                })
            })
            .collect();
        Self {
            gens: minimalize(points),
        }
    }

    /// Ideal sum: union of the generator sets, minimalized.
    pub fn sum(&self, other: &Self) -> Self {
        let mut points = self.gens.clone();
        points.extend_from_slice(&other.gens);
        Self {
            gens: minimalize(points),
        }
    }

    /// Number of standard monomials: lattice points not dominated by any
    /// generator. Counted column by column with 64-bit overflow checks.
    pub fn colength(&self) -> Result<u64, OracleError> {
        if !self.is_primary() {
            return Err(OracleError::InfiniteColength);
        }
        let max_i = self.gens.last().map(|&(a, _)| a).unwrap_or(0);
        let mut total: u64 = 0;
        let mut next = 0usize;
        let mut height: Option<u64> = None;
        for i in 0..=max_i {
            while next < self.gens.len() && self.gens[next].0 <= i {
                let j = self.gens[next].1;
                height = Some(height.map_or(j, |h| h.min(j)));
                next += 1;
            }
            // Columns before the first generator are outside every staircase,
            // but is_primary guarantees a generator at i = 0.
            let h = height.expect("primary ideal has a generator with i = 0");
            total = total.checked_add(h).ok_or(OracleError::ColengthOverflow)?;
        }
        Ok(total)
    }

    /// `min { v(g) : g generator }`; equals the minimum of `v` over the whole
    /// ideal by monotonicity.
    pub fn min_valuation(&self, v: &MonomialValuation) -> u64 {
        self.gens
            .iter()
            .map(|&g| v.value(g))
            .min()
            .expect("ideal has at least one generator")
    }
}

/// The ideal of all monomials with `v(x^i y^j) >= n`, as its minimal antichain
/// of staircase corners.
pub fn val_ideal(v: &MonomialValuation, n: u64) -> MonomialIdeal {
    if n == 0 {
        return MonomialIdeal::unit();
    }
    let (a, b) = (v.a(), v.b());
    let j_max = n.div_ceil(b);
    let points = (0..=j_max)
        .map(|j| {
            let need = n.saturating_sub(b * j);
            (need.div_ceil(a), j)
        })
        .collect();
    MonomialIdeal {
        gens: minimalize(points),
    }
}

/// Keeps the minimal elements of a point set under componentwise order:
/// sort by `(i, j)` and keep points whose `j` strictly descends.
fn minimalize(mut points: Vec<(u64, u64)>) -> Vec<(u64, u64)> {
    assert!(!points.is_empty(), "an ideal needs at least one generator");
    points.sort_unstable();
    points.dedup();
    let mut out: Vec<(u64, u64)> = Vec::new();
    for (i, j) in points {
        match out.last() {
            Some(&(_, last_j)) if j >= last_j => {}
            _ => out.push((i, j)),
        }
    }
    out
}
