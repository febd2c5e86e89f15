//! Crate-wide error type.

use nalgebra::DVector;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid dimension {0}: need n >= 2")]
    InvalidDimension(usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("subspace dimension {k} out of range 1..={n}")]
    SubspaceDimension { n: usize, k: usize },

    #[error("unsupported sphere dimension {0} (supported: 1..=4)")]
    UnsupportedSphereDim(usize),

    #[error("support function not differentiable: {tied} boundary points tie at this direction")]
    Multivalued { tied: Vec<DVector<f64>> },

    #[error("body has no second derivative at this direction ({kind})")]
    NoHessian { kind: &'static str },

    #[error("no projection-volume method applies: {reason}")]
    UnsupportedMethod { reason: String },

    #[error("constant-width construction failed: scale shrank to {eps} without reaching convexity")]
    ConstructionFailed { eps: f64 },

    #[error("reference body is not positively curved at this direction (min radius {min_radius})")]
    SingularReference { min_radius: f64 },

    #[error("body is not rotationally symmetric about the given axis (max deviation {deviation})")]
    NotBodyOfRevolution { deviation: f64 },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("body spec parse error: {0}")]
    Parse(String),
}
