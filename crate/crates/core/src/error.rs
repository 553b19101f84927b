use thiserror::Error;

/// Errors raised by arithmetic, geometry and suite code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Bad argument: division by zero, identical points, mixed radicands...
    #[error("domain error: {0}")]
    Domain(String),

    /// The number system lacks a capability the operation needs
    /// (ordering, commutativity, associativity).
    #[error("capability error: {0}")]
    Capability(String),

    /// A truncated series does not know enough terms to answer.
    #[error("precision error: {0}")]
    Precision(String),

    /// A geometric construction hit a coincidence or a missing intersection.
    #[error("degenerate construction at step `{step}`")]
    Degenerate { step: String },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub fn precision(msg: impl Into<String>) -> Self {
        Error::Precision(msg.into())
    }

    pub fn degenerate(step: impl Into<String>) -> Self {
        Error::Degenerate { step: step.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
