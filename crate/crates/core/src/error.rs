use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coroot index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("character average is not an integer: {0}")]
    NonIntegral(String),

    #[error("freudenthal recursion failed at {weight}: {reason}")]
    Freudenthal { weight: String, reason: String },

    #[error("no closed-form bound is available for {0}")]
    NoPaperBound(String),

    #[error("inconsistent boundary datum: {0}")]
    InconsistentDatum(String),

    #[error("unknown case id `{0}`")]
    UnknownCase(String),

    #[error("search certificate failed: {0}")]
    Certificate(String),

    #[error("malformed baseline: {0}")]
    Baseline(String),
}
