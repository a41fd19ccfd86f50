use thiserror::Error;

/// Crate-wide error type.
///
/// Variants map onto the CLI exit codes: validation and schema errors exit
/// with 2, numerical non-convergence with 3, and I/O failures with 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("validation: {0}")]
    Validation(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("no convergence after {iterations} iterations (best residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error(
        "krylov subspace reached dimension {dim} with residual estimate {residual:.3e} \
         above tolerance {tol:.1e}; reduce dt"
    )]
    KrylovNoConvergence { dim: usize, residual: f64, tol: f64 },

    #[error("schema: {0}")]
    Schema(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn schema(msg: impl Into<String>) -> Self {
        Error::Schema(msg.into())
    }

    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) | Error::DimensionMismatch { .. } | Error::Schema(_) => 2,
            Error::NoConvergence { .. } | Error::KrylovNoConvergence { .. } => 3,
            Error::Io(_) | Error::Json(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
