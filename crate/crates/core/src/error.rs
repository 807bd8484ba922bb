use thiserror::Error;

/// Errors raised by constructors, conversions and file loading.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("algebra dimension must be positive")]
    ZeroDimension,

    #[error("matrix size must be positive")]
    ZeroMatrixSize,

    #[error("invalid rational literal {literal:?}: {reason}")]
    BadRational { literal: String, reason: String },

    #[error("ternary component {pattern} -> {output} violates the degree constraint")]
    DegreeViolation { pattern: String, output: String },

    #[error("ternary operation has a non-type-B component on pattern {pattern}")]
    NonTypeB { pattern: String },

    #[error(
        "dual table of the ternary operation is not the cyclic completion of its primary table"
    )]
    InconsistentDualTable,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("no combination of seed sizes {sizes:?} fills matrix size {n}")]
    SeedSizesDoNotFit { sizes: Vec<usize>, n: usize },

    #[error("representation seed does not satisfy the structure constants: {reason}")]
    InvalidSeed { reason: String },

    #[error("{context}: {reason}")]
    Schema { context: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON parse error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
