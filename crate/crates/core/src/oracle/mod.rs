//! Independent brute-force verification path: monomial valuation ideals,
//! staircase colength counting, limit fitting, tau-sequences, truncated
//! filtrations, and the toric construction bridging the lattice-counting
//! world to the intersection-theory world.
//!
//! The oracle is deliberately restricted to two variables and monomial data:
//! it exists to verify, not to generalize. Monomial valuations are exactly
//! the divisorial filtrations whose multiplicities can be computed by pure
//! lattice point counting, with no intersection theory anywhere in the path.

mod filtration;
mod fit;
mod monomial;
mod toric;

pub use filtration::{
    filtration_ideal, tau_sequence, truncate, OracleFiltrationSpec, TruncatedFiltration,
};
pub use fit::{limit_fit, mixed_poly_oracle, GridEstimate, LimitFit, MixedPolyEstimate, MIN_FIT_POINTS};
pub use monomial::{val_ideal, MonomialIdeal, MonomialValuation};
pub use toric::{toric_config, ToricBuild};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("ideal is not m-primary: colength is infinite")]
    InfiniteColength,
    #[error("colength exceeds 64 bits")]
    ColengthOverflow,
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { got: usize, needed: usize },
    #[error("target ({a},{b}) is not primitive: gcd is {gcd}")]
    NonPrimitiveTarget { a: u64, b: u64, gcd: u64 },
    #[error("monomial valuation weights must be positive, got ({a},{b})")]
    NonPositiveValuation { a: u64, b: u64 },
    #[error("filtration spec needs at least one positive coefficient")]
    EmptySpec,
    #[error("toric construction needs at least one target valuation")]
    NoTargets,
}
