use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Caller handed in data that violates an operation's precondition.
    #[error("usage error: {0}")]
    Usage(String),
    /// A configured size bound would be exceeded.
    #[error("resource bound exceeded: {what} needs {needed}, bound is {bound}")]
    Resource { what: String, needed: u128, bound: u128 },
    /// An internal consistency check failed (bad prime, failed lift, corrupt table).
    #[error("internal error: {0}")]
    Internal(String),
    #[error("class function is not a virtual character: coefficient {0} is not an integer")]
    NotVirtualCharacter(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("serialization error: {0}")]
    Serde(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serde(e.to_string())
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
