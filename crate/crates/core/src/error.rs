use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("bracket key ({i}, {j}) must satisfy i < j")]
    UnorderedKey { i: usize, j: usize },

    /// Indices are 1-based, as in the JSON encoding.
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },

    #[error("linear map does not preserve the bracket on basis pair ({i}, {j})")]
    NotAHomomorphism { i: usize, j: usize },

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("subspace is not central")]
    NotCentral,

    #[error("algebra has nilpotency class {0}, expected exactly 2")]
    NotClassTwo(usize),

    #[error("algebra has nilpotency class {0}; only class <= 2 is supported")]
    ClassTooHigh(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("serialization error: {0}")]
    Serde(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}
