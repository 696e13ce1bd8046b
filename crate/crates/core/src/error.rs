use thiserror::Error;

/// Errors raised by the library.
///
/// `Parse` and `Resource` are distinguished so the command-line front end can
/// map them to dedicated exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("operation undefined on the unit 1")]
    Unit,

    #[error("precondition violated: {0}")]
    Domain(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
