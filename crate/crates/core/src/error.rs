use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the ambient subspace")]
    NotASubspace,
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("invalid point configuration: {0}")]
    InvalidPoints(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("degree {requested} exceeds the table cutoff {cutoff}")]
    CutoffExceeded { requested: usize, cutoff: usize },
    #[error("construction failed: {0}")]
    Construction(String),
    /// A computed identity that must hold did not; indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
