//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide error enum.
#[derive(Debug, Error)]
pub enum NumradError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian: {0}")]
    NotHermitian(String),

    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("eigenvalue {value:e} below the clipping floor {floor:e}")]
    NegativeEigenvalue { value: f64, floor: f64 },

    #[error("scalar function undefined at eigenvalue {0:e}")]
    PhiDomain(f64),

    #[error("matrix is not entrywise nonnegative: {0}")]
    NotNonnegative(String),

    #[error("matrix is not upper triangular: {0}")]
    NotUpperTriangular(String),

    #[error("matrix is not positive semidefinite: {0}")]
    NotPsd(String),

    #[error("matrix is not unitary: {0}")]
    NotUnitary(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("operator list is empty")]
    EmptyList,

    #[error("bad ensemble config: {0}")]
    BadConfig(String),

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("invalid f,g pair '{label}': {detail}")]
    FgValidation { label: String, detail: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, NumradError>;
