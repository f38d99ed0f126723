//! Crate-wide error type.
//!
//! Mathematical outcomes (refuted, unknown-at-bounds) are never errors; they
//! are [`crate::semidomain::Verdict`] values. Errors are reserved for
//! malformed inputs and out-of-contract queries.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("mixed coefficient rings")]
    MixedRings,
    #[error("non-exact division")]
    NonExactDivision,
    #[error("exponent dimension mismatch")]
    DimensionMismatch,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("degree cap {cap} exceeded (degree {got})")]
    DegreeCapExceeded { cap: u32, got: u32 },
    #[error("element is not a member of the instance")]
    NotMember,
    #[error("element does not live in the instance ambient")]
    AmbientMismatch,
    #[error("element is a unit")]
    IsUnit,
    #[error("zero element")]
    ZeroElement,
    #[error("unsupported element shape for this query")]
    UnsupportedElement,
    #[error("fractions belong to different instances")]
    InstanceMismatch,
    #[error("invalid multiplicative set: {0}")]
    InvalidMultiplicativeSet(String),
    #[error("square of element left the semidomain")]
    SquareNotMember,
    #[error("unknown theorem id `{0}`")]
    UnknownTheoremId(String),
    #[error("unknown length function `{0}`")]
    UnknownLengthFunction(String),
    #[error("syntax error at byte {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("coefficient ring mismatch for instance")]
    RingMismatch,
    #[error("invalid monoid spec: {0}")]
    InvalidMonoidSpec(String),
    #[error("not a member of the monoid")]
    NotMonoidMember,
    #[error("unknown instance `{0}`")]
    UnknownInstance(String),
    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
