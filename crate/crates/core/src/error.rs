use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the set where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// A guarded computation would exceed its work budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// An empirical search finished without finding what it looked for.
    #[error("search failed: {0}")]
    SearchFailure(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
