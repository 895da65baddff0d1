use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on operation arguments was violated.
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    /// A brute-force or enumeration bound was exceeded.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    /// A language spec string failed to parse.
    #[error("language spec syntax: {0}")]
    SpecSyntax(String),
    /// An input file (graph, word, host) was malformed.
    #[error("input format: {0}")]
    InputFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArguments(msg.into())
    }
    pub(crate) fn limit(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }
    pub(crate) fn syntax(msg: impl Into<String>) -> Self {
        Error::SpecSyntax(msg.into())
    }
    pub(crate) fn format(msg: impl Into<String>) -> Self {
        Error::InputFormat(msg.into())
    }
}
