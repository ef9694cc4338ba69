use thiserror::Error;

/// Errors produced by the counting engine and its parsers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input text. `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A well-formed request that does not satisfy an operation's preconditions.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The requested enumeration is larger than the configured cap.
    #[error("{what} refused: {requested} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: String,
        cap: String,
    },

    /// An internal identity failed to hold. Always a bug in this crate.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn argument(message: impl Into<String>) -> Self {
        Error::Argument(message.into())
    }

    pub(crate) fn internal(message: impl Into<String>) -> Self {
        Error::Internal(message.into())
    }

    /// Process exit status associated with this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Argument(_) => 2,
            Error::CapExceeded { .. } => 3,
            Error::Internal(_) => 4,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
