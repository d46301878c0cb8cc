use thiserror::Error;

/// Errors raised by constructions and verifications.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("first tensor factor carries no grading")]
    MissingGrading,
    #[error("clifford relation violated: {0}")]
    Relation(String),
    #[error("algebra identification failed: {0}")]
    Identification(String),
    #[error("invariant mismatch: {0}")]
    InvariantMismatch(String),
    #[error("span check failed: {0}")]
    Span(String),
    #[error("symmetry mismatch: {0}")]
    SigmaMismatch(String),
    #[error("jacobi identity fails: {0}")]
    Jacobi(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
