use thiserror::Error;

/// Failure modes shared by every layer of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Family or triple parameters violate their invariants.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// A documented precondition does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The requested tolerance is too coarse to certify a result.
    #[error("tolerance failure: {0}")]
    Tolerance(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
