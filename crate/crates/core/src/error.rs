use thiserror::Error;

/// Errors raised by the numeric core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid basis number: {0}")]
    InvalidBasis(String),
    #[error(
        "basis number is symmetric: lower(α) + upper(α) is constant, so r + qA is not injective"
    )]
    SymmetricBasis,
    #[error("basis 1-level is not a single point")]
    NonSingletonCore,
    #[error("division by zero")]
    DivisionByZero,
    #[error("argument of zero is undefined")]
    UndefinedArgument,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("evaluation failed: {0}")]
    Evaluation(String),
    #[error("integration aborted at t = {time}: non-finite field value")]
    IntegrationAbort { time: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
