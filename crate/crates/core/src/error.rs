use thiserror::Error;

/// Failures raised by the library.
///
/// The CLI maps [`Error::Parse`] and [`Error::InvalidParameter`] to exit code 2
/// and every other variant to exit code 1.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("element {0} is not in the group")]
    NotInGroup(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("hypothesis failed: {what} (witness: {witness})")]
    Hypothesis { what: String, witness: String },
    #[error("matrix is not symmetric: A[{row},{col}] != A[{col},{row}]")]
    NotSymmetric { row: usize, col: usize },
    #[error("dense cap exceeded: {n} vertices > cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn hypothesis(what: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Hypothesis {
            what: what.into(),
            witness: witness.into(),
        }
    }

    /// True for errors caused by malformed input rather than failed mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::InvalidParameter(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
