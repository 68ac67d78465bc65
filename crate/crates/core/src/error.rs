use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("deformation parameter q = {0} outside (0, 1]")]
    InvalidDeformation(f64),

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("operands carry different algebra parameters (q = {left} vs q = {right})")]
    ParamsMismatch { left: f64, right: f64 },

    #[error("expected a {expected}-leg element, got {found} legs")]
    LegMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("corepresentation is not unitary (residual {0:e})")]
    NotUnitary(f64),

    #[error("no positive intertwiner: {0}")]
    NoIntertwiner(String),

    #[error("matrix is not hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("not a density matrix: {0}")]
    NotState(String),

    #[error("negative mixture weight {0}")]
    NegativeWeight(f64),

    #[error("factor is not positive definite: {0}")]
    NotPositiveDefinite(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
