use std::fmt;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    Domain(String),
    /// Operation is not defined for the requested cutoff family or order.
    Unsupported(String),
    /// An iterative computation failed to reach its target tolerance.
    NonConvergence {
        what: String,
        achieved: f64,
        required: f64,
    },
    /// Least-squares design matrix is numerically singular.
    IllConditioned { condition: f64 },
    /// Sample set violates a precondition of a fitting routine.
    InvalidSamples(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::NonConvergence {
                what,
                achieved,
                required,
            } => write!(
                f,
                "{what} did not converge: achieved tolerance {achieved:.3e}, required {required:.3e}"
            ),
            Error::IllConditioned { condition } => write!(
                f,
                "ill-conditioned design matrix (condition estimate {condition:.3e} > 1e12); \
                 consider rescaling the fit powers"
            ),
            Error::InvalidSamples(msg) => write!(f, "invalid samples: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
