use thiserror::Error;

/// Errors raised across the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the domain of the operation (zero divisor, |x| >= 1, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A model parameter violates its invariants.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// A size or iteration cap was hit.
    #[error("resource error: {0}")]
    Resource(String),
    /// The requested construction is not available in the selected mode.
    #[error("mode error: {0}")]
    Mode(String),
    /// Malformed serialized input.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
