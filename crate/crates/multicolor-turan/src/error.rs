//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by constructors, oracles and searches.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument violates a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Input data contradicts an invariant it claims to satisfy
    /// (e.g. a coloring that is not a proper partition).
    #[error("contract violation: {0}")]
    ContractViolation(String),
    /// The instance is larger than the configured exact-computation limit.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    /// A text artifact (pattern or coloring file) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// Underlying I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Convenience constructor for [`Error::InvalidArgument`].
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Convenience constructor for [`Error::ContractViolation`].
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }

    /// Convenience constructor for [`Error::SizeLimit`].
    pub fn size_limit(msg: impl Into<String>) -> Self {
        Error::SizeLimit(msg.into())
    }

    /// Convenience constructor for [`Error::Parse`].
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
