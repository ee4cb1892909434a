//! Error type shared by every module in the crate.

use thiserror::Error;

/// Errors raised by polynomial construction, root finding, index decisions
/// and multiplier sequence analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no degree and no indices")]
    ZeroPolynomial,

    #[error("index {index} is out of range for a polynomial of degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },

    #[error("index {index} is not an index of the requested kind for this polynomial")]
    NotAnIndex { index: usize },

    #[error("coefficient {index} is zero; this operation requires nonzero coefficients")]
    ZeroCoefficient { index: usize },

    #[error("input of size {size} exceeds the exhaustive sweep cap {max}")]
    SweepTooLarge { size: usize, max: usize },

    #[error("multiplier sequence has {got} entries but at least {needed} are required")]
    SequenceTooShort { needed: usize, got: usize },

    #[error("sign pattern has {got} entries but the polynomial has {expected} coefficients")]
    LengthMismatch { expected: usize, got: usize },

    #[error("multiplier sequences must be strictly positive (entry {index} is not)")]
    NonPositiveEntry { index: usize },

    #[error("sequence is not log-concave (first violation at index {violating_index})")]
    NotLogConcave { violating_index: usize },

    #[error("sequence is log-concave, so no counterexample exists")]
    IsLogConcave,

    #[error("cannot take the square root of a negative number")]
    NegativeRadicand,

    #[error("index {index} admits no strictly positive witness (only z = 0 works)")]
    PositiveWitnessUnavailable { index: usize },

    #[error("invalid rational literal: {0:?}")]
    InvalidNumber(String),

    #[error("sign patterns may contain only +1 and -1")]
    InvalidSignPattern,

    #[error("interval endpoints must satisfy lo <= hi")]
    InvalidInterval,

    #[error("the interval does not isolate a single root")]
    NotIsolating,
}
