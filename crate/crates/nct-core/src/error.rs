use thiserror::Error;

/// Error type shared by all `nct-*` crates.
#[derive(Debug, Error)]
pub enum NctError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("deformation matrices differ between operands")]
    ThetaMismatch,

    #[error("matrix is not antisymmetric: |θ[{j}][{k}] + θ[{k}][{j}]| = {defect:e}")]
    NotAntisymmetric { j: usize, k: usize, defect: f64 },

    #[error("invalid torus dimension {0}: need d >= 2")]
    InvalidDimension(usize),

    #[error("axis {axis} out of range for dimension {d}")]
    AxisOutOfRange { axis: usize, d: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("linear algebra backend failure: {0}")]
    Linalg(String),

    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}
