use thiserror::Error;

/// Errors produced by the library. Every variant is an invalid-argument
/// condition; the CLI maps all of them to exit status 2.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("angle must be finite, got {0}")]
    NonFiniteAngle(f64),

    #[error("ket has zero norm")]
    ZeroNorm,

    #[error("state is not normalized: |norm^2 - 1| = {0:e}")]
    NotNormalized(f64),

    #[error("{name} = {value} outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("invalid hidden-variable model: {0}")]
    InvalidModel(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
