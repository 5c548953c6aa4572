use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the mathematical input was violated.
    #[error("{0}")]
    Domain(String),
    /// Malformed text input; `position` is a 0-based byte offset.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    /// The request exceeds a configured resource guard.
    #[error("resource guard: {0}")]
    Resource(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}
