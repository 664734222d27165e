//! Exact arithmetic: univariate rational polynomials, the parametric
//! coefficient ring in `k`, `y`, `q`, and truncated multivariate (optionally
//! Laurent) series over any exact coefficient ring.
//!
//! Nothing in this module (or anywhere in the crate) uses floating point;
//! every coefficient is an arbitrary-precision rational or a canonical
//! fraction of polynomials.

pub mod coeff;
pub mod laws;
pub mod poly;
pub mod series;

pub use coeff::{Coeff, CoeffRing, Mono};
pub use laws::{verify_ring_laws, RingLawReport};
pub use poly::UniPoly;
pub use series::{CoeffOps, RatRing, Series, SeriesRing};

/// Errors from exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactAlgError {
    /// Inversion of a non-unit was requested.
    #[error("not a unit: {0}")]
    NotAUnit(String),
    /// A nonzero coefficient fell below the declared pole bound.
    #[error("pole bound exceeded: {0}")]
    PoleOverflow(String),
    /// An operation was applied to operands outside its domain.
    #[error("invalid operand: {0}")]
    InvalidOperand(String),
    /// A specialization or evaluation hit a singular point.
    #[error("evaluation failed: {0}")]
    Eval(String),
    /// The randomized law suite found a counterexample.
    #[error("ring law violated: {0}")]
    LawViolation(String),
}
