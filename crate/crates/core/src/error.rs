//! Error types shared across the crate.

use thiserror::Error;

use crate::layout::Role;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown subsystem `{0}`")]
    UnknownSubsystem(String),

    #[error("duplicate register name `{0}`")]
    DuplicateName(String),

    #[error("subsystem `{name}` has invalid dimension {dim}")]
    InvalidDimension { name: String, dim: usize },

    #[error("total dimension {0} exceeds the configured maximum {1}")]
    DimensionTooLarge(usize, usize),

    #[error("amplitude vector has squared norm {0}, expected 1")]
    NotNormalized(f64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("operator has trace {0}, expected 1")]
    TraceNotOne(f64),

    #[error("eigenvalue {0:.3e} below the negativity tolerance")]
    NegativeEigenvalue(f64),

    #[error("matrix is not an isometry (max column-orthonormality deviation {0:.3e})")]
    NotIsometry(f64),

    #[error("no subsystem carries role {0}")]
    MissingRole(Role),

    #[error("bipartition side is empty")]
    EmptyCut,

    #[error("spectrum is invalid: {0}")]
    InvalidSpectrum(String),

    #[error("protocol script is invalid: {0}")]
    Script(String),

    #[error("document is invalid: {0}")]
    Document(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI, per documented error classes.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Document(_) | Error::Json(_) => 2,
            Error::MissingRole(_) => 3,
            Error::Io(_) => 4,
            Error::Script(_) => 5,
            _ => 1,
        }
    }
}
