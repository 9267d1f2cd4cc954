use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension {dim} outside supported range {min}..={max}")]
    DimensionOutOfRange { dim: usize, min: usize, max: usize },

    #[error("vertex bits {bits:#b} do not fit in dimension {dim}")]
    VertexOutOfRange { bits: u32, dim: usize },

    #[error("a {dim}-simplex needs {expected} vertices, got {got}")]
    WrongVertexCount { dim: usize, expected: usize, got: usize },

    #[error("simplex has a repeated vertex")]
    RepeatedVertex,

    #[error("mixed dimensions: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("simplex is degenerate")]
    DegenerateSimplex,

    #[error("invalid neighbor query: {0}")]
    InvalidQuery(&'static str),

    #[error("triangulation carries no provenance tags")]
    MissingTags,

    #[error("{what} at dimension {dim} exceeds the default budget; pass the budget flag to run it")]
    BudgetExceeded { what: &'static str, dim: usize },

    #[error("unknown {kind} `{name}` (available: {available})")]
    UnknownStrategy { kind: &'static str, name: String, available: String },

    #[error("parse error: {0}")]
    Parse(String),
}
