use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A configured size cap would be exceeded.
    #[error("size limit exceeded: {what} ({requested} > {cap})")]
    SizeLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    /// The arguments do not satisfy the operation's contract.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A mathematical precondition does not hold.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// The value exists but has no exact representation in this crate.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
