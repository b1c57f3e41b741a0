use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("no circuits")]
    NoCircuits,

    #[error("point {0} is not a vertex")]
    NotAVertex(usize),

    #[error("polytope has no vertices")]
    EmptyPolytope,

    #[error("polytope is not a lattice polytope (vertex {0} has a non-integer coordinate)")]
    NotLattice(usize),

    #[error("origin is not in the relative interior of the polytope")]
    OriginNotInterior,

    #[error("dimension {dim} exceeds the face-enumeration limit {limit}")]
    DimensionGuard { dim: usize, limit: usize },

    #[error("{count} generators exceed the zonotope limit {limit}")]
    GeneratorGuard { count: usize, limit: usize },

    #[error("polytope needs dimension at least {0}")]
    TooLowDimension(usize),

    #[error("linear map does not preserve the polytope (vertex {0} leaves it)")]
    NotInvariant(usize),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("internal cross-check failed: {0}")]
    Mismatch(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
