//! Exact intersection theory for divisorial filtrations on two-dimensional
//! resolutions.
//!
//! The input is a weighted dual graph: exceptional curves with a negative
//! definite integer intersection matrix, partitioned into branches. On top of
//! it the crate computes, in exact rational arithmetic,
//!
//! - Zariski decompositions `Delta = D + B` of effective divisors
//!   ([`zariski`]), with a subset-enumeration oracle for cross-checking;
//! - volumes `Vol(D) = -(Delta^2)`, mixed multiplicities
//!   `-(Delta_i . Delta_j)` and the degree-2 multiplicity polynomial,
//!   optionally branch-weighted ([`multiplicity`]);
//! - reports for the Minkowski inequalities and their equality case, the
//!   Rees theorem for dominated pairs, and the gamma candidates
//!   ([`theorems`]);
//! - an entirely independent verification path through monomial valuation
//!   ideals and staircase lattice counting, including the toric construction
//!   that turns monomial valuations into a dual graph so both paths can be
//!   compared on the same inputs ([`oracle`]).
//!
//! A small JSON layer ([`json`]) serializes configurations, divisors and
//! filtration specs for the command line front end; rationals travel as
//! strings in lowest terms so results stay exact end to end.
//!
//! The narrative guide lives in the `book/` directory of the repository; its
//! code snippets are compiled and run as doctests of this crate.
//!
//! ```
//! use antinef::config::{ExceptionalConfig, QDivisor};
//! use antinef::multiplicity::volume;
//! use antinef::rational::frac;
//!
//! let config = ExceptionalConfig::single_branch(vec![vec![-2, 1], vec![1, -2]])?;
//! let d = QDivisor::curve(0, 2);
//! assert_eq!(volume(&config, &d)?, frac(3, 2));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod config;
pub mod json;
pub mod multiplicity;
pub mod oracle;
pub mod rational;
pub mod theorems;
pub mod zariski;

pub use config::{ExceptionalConfig, QDivisor};
pub use rational::Q;
pub use zariski::ZariskiDecomposition;

#[cfg(doctest)]
mod book;
