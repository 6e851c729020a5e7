use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Domain` marks a violated mathematical precondition (the input is outside
/// the hypotheses of the operation), `Parse` a malformed textual input,
/// `Internal` an exactness assertion that can only fail on a library bug
/// (e.g. a non-integral eigenvalue multiplicity).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("dataset error: {0}")]
    Dataset(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
