use thiserror::Error;

/// Errors produced by the engine.
///
/// Every operation that would need simplex data beyond a truncated cap
/// fails loudly with [`Error::CapExceeded`] rather than silently returning
/// partial answers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {needed} exceeds the available cap {cap}")]
    CapExceeded { needed: usize, cap: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("invalid ordinal map: {0}")]
    InvalidOrdinal(String),

    #[error("invalid simplicial set: {0}")]
    InvalidSSet(String),

    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),

    #[error("map is not an inclusion: {0}")]
    NotInclusion(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("invalid category: {0}")]
    InvalidCategory(String),

    #[error("search budget exhausted ({0})")]
    BudgetExceeded(String),

    #[error("oracle failure: {0}")]
    Oracle(String),

    #[error("certificate rejected: {0}")]
    Certificate(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
