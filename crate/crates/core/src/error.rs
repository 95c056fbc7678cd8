use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series is not invertible: zero constant term")]
    NotInvertible,
    #[error("square root needs constant term 1")]
    SqrtConstantTerm,
    #[error("truncation orders differ: ({0}, {1}) vs ({2}, {3})")]
    OrderMismatch(usize, usize, usize, usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("{0}")]
    Domain(String),
    #[error("expected an integral value, got {0}")]
    NonIntegral(String),
    #[error("denominator does not cancel: {0}")]
    NonCancelling(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
