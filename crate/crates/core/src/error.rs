use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("subspace is not contained in the ambient subspace")]
    NotContained,

    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("subspace is not closed: {0}")]
    NotClosed(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("element does not lie in the solution space: {0}")]
    NotInSolutionSpace(String),

    #[error("none of the conditions CON1, CON2, CON3 holds: {0}")]
    NoCondition(String),

    #[error("sequence is not exact: {0}")]
    NotExact(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
