use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An iterative method failed to converge.
    #[error("numerical error: {what} (degree/index {index}, last residual {residual:e})")]
    Numerical {
        what: String,
        index: usize,
        residual: f64,
    },
    /// A requested accuracy or size cannot be reached within the configured budget.
    #[error("resource error: {0}")]
    Resource(String),
    /// Exact arithmetic produced an impossible result.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numerical(what: impl Into<String>, index: usize, residual: f64) -> Self {
        Error::Numerical {
            what: what.into(),
            index,
            residual,
        }
    }

    /// Process exit status for this error class: 2 for domain errors, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
