use thiserror::Error;

/// Errors produced by the sequence, decomposition and semigroup routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The generators do not have gcd 1.
    #[error("not a numerical semigroup: gcd of generators is {gcd}")]
    NotNumericalSemigroup { gcd: String },

    /// A table would exceed the configured size bound.
    #[error("resource bound exceeded: {what} needs {requested} entries, bound is {bound}")]
    Resource {
        what: &'static str,
        requested: String,
        bound: u64,
    },

    /// A value that must fit in a machine word did not.
    #[error("overflow: {0}")]
    Overflow(String),

    /// A self-check failed. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
