use thiserror::Error;

use crate::laurent::LaurentError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("enumerated {enumerated} basic classes but the count formula gives {formula}")]
    CountMismatch { enumerated: usize, formula: i64 },
    #[error("assertion failed: {0}")]
    AssertionFailure(String),
    #[error("zero vector has no primitivity")]
    ZeroVector,
    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("Fox minors are not consistent: {0}")]
    InconsistentMinors(String),
    #[error("cannot parse braid word: {0}")]
    BraidParse(String),
    #[error("invalid component coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
