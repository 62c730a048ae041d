use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Constant term of a series is not 1, so no integer inverse exists.
    #[error("series is not invertible over the integers (constant term {0})")]
    NotInvertible(String),

    #[error("coefficient q^{index} requested from a series truncated at order {order}")]
    BeyondOrder { index: i64, order: usize },

    #[error("table covers 0..={available} but index {needed} was requested")]
    TableTooShort { needed: i64, available: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration guard exceeded: n = {n} > {limit}")]
    GuardExceeded { n: u64, limit: u64 },

    #[error("table family mismatch: expected {expected}, got {actual}")]
    FamilyMismatch { expected: String, actual: String },

    #[error("inexact division: {numerator} is not divisible by {denominator}")]
    InexactDivision {
        numerator: String,
        denominator: String,
    },

    #[error("index {index} out of bounds for a sequence of length {len}")]
    IndexOutOfBounds { index: usize, len: usize },

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
