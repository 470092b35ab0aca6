use thiserror::Error;

/// Errors raised by the library.
///
/// Mathematical outcomes that are not failures (for instance a pencil whose
/// singular members are defined over an extension of the rationals) are
/// returned as dedicated enum values by the operations that produce them and
/// never appear here.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the zero binary form has no well-defined root count")]
    ZeroForm,
    #[error("matrix is singular: {0}")]
    SingularMatrix(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("arrangement has mixed degrees {0:?}")]
    MixedDegrees(Vec<u32>),
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("points are not in general position: {0}")]
    GeneralPosition(String),
    #[error("instability is not meaningful here: {0}")]
    NotMeaningful(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate frame: {0}")]
    DegenerateFrame(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
