use thiserror::Error;

/// Errors raised by the algebra engine.
///
/// Checker failures (axioms, relations, cocycle conditions) are never
/// errors; they are recorded in a [`crate::report::CheckReport`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid character: {0}")]
    InvalidCharacter(String),

    #[error("invalid Lie algebra: {0}")]
    InvalidLieAlgebra(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("non-composable word: {0}")]
    NotComposable(String),

    #[error("matrix is not idempotent")]
    NotIdempotent,

    #[error("not a cyclic module: {0}")]
    NotCyclic(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
