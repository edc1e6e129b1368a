use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An iterative or truncated computation did not reach its tolerance.
    #[error("no convergence: {0}")]
    NonConvergence(String),

    /// A quantity that must be inverted is numerically zero.
    #[error("degenerate: {0}")]
    Degenerate(String),

    #[error("expected {expected} roots, found {found} ({detail})")]
    RootCountMismatch {
        expected: usize,
        found: usize,
        detail: String,
    },

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
