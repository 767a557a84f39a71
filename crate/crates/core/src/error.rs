use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed set specification; `pos` is a byte offset into the input.
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    /// Well-formed input that violates a domain invariant.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// The operation is not defined for this kind of input.
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration would produce {count} compositions, above the ceiling of {ceiling}")]
    CeilingExceeded { count: String, ceiling: u64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
