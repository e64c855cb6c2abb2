use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {}", .0.join("; "))]
    Invalid(Vec<String>),

    #[error("cannot compose {left} ∘ {right}: source of {left} is not the target of {right}")]
    Composability { left: String, right: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("inconsistent data: {0}")]
    DataInconsistency(String),

    #[error("size bound exceeded: {0}")]
    Size(String),

    #[error("multiplicity overflow while composing {0}")]
    Overflow(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// Errors caused by the input rather than by a failed check.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::Invalid(_)
                | Error::Io { .. }
                | Error::Argument(_)
                | Error::Unsupported(_)
        )
    }
}
