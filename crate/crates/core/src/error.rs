use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("functional undefined at z = {z} (denominator below threshold)")]
    UndefinedAtPoint { z: Complex64 },

    #[error("normalization violated: functional value at 0 is {value}, expected 1")]
    NormalizationViolation { value: Complex64 },

    #[error("ambiguous root: |root| = {modulus} lies within the guard band of radius {radius}")]
    AmbiguousRoot { modulus: f64, radius: f64 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
