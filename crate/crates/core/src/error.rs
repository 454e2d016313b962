use thiserror::Error;

/// Errors raised by the model, the numerical oracles and the report layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("x = {x} lies outside the admissible range {range}")]
    OutOfDomain { x: f64, range: String },

    #[error("quadrature failed: {0}")]
    Quadrature(String),

    #[error("wavefunction tables are not defined on the same grid")]
    GridMismatch,

    #[error("eigenvalue bisection for level {level} did not converge in {iterations} iterations")]
    Convergence { level: usize, iterations: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, value: f64, reason: &'static str) -> Error {
    Error::InvalidParameter {
        name,
        value,
        reason,
    }
}
