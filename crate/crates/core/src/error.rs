use thiserror::Error;

/// Errors raised by constructions, factorizations and checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    /// A hypothesis of a construction does not hold for the given input.
    #[error("hypothesis violated: {0}")]
    Precondition(String),

    #[error(
        "{what} did not converge after {iterations} sweeps (relative residual {residual:.3e})"
    )]
    NonConvergence {
        what: &'static str,
        iterations: usize,
        residual: f64,
    },

    #[error("family does not commute: commutator of members {i} and {j} has norm {norm:.3e}")]
    CommutationFailure { i: usize, j: usize, norm: f64 },

    /// A construction produced output that failed its own postcondition.
    #[error("postcondition failed: {0}")]
    Verification(String),
}

impl Error {
    /// True when the caller handed in data that the construction does not accept.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch(_) | Error::NotSquare { .. } | Error::Precondition(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
