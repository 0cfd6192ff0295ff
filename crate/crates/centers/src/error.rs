//! Error type for center-function operations.

use geom_core::GeomError;
use thiserror::Error;

/// Errors produced by center evaluation and combination.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CentersError {
    /// The function's trace vanishes (or changes sign) somewhere in shape
    /// space, so it cannot be normalized.
    #[error("center function {label} is not traceable and cannot be normalized")]
    NotTraceable { label: String },

    /// Two functions entering an affine combination have different
    /// homogeneity degrees.
    #[error("homogeneity degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: i32, right: i32 },

    /// A constant-affine combination was given a zero coefficient.
    #[error("constant-affine coefficients must be nonzero")]
    ZeroCoefficient,

    /// A label was requested that no catalog or coefficient table knows.
    #[error("unknown center label {label}")]
    UnknownCenter { label: String },

    /// All three cyclic evaluations of a center function vanished, so no
    /// projective point is defined.
    #[error("degenerate center: all cyclic evaluations vanish at ({a}, {b}, {c})")]
    DegenerateCenter { a: f64, b: f64, c: f64 },

    /// An evaluation hit a pole (division by a vanishing value).
    #[error("pole encountered evaluating a center function at ({a}, {b}, {c})")]
    Pole { a: f64, b: f64, c: f64 },

    /// The 2×2 system for affine coefficients is (numerically) singular,
    /// which happens at equilateral shapes or for coinciding parents.
    #[error("rank-deficient coefficient system: denominator {denominator:e}")]
    RankDeficient { denominator: f64 },

    /// An underlying geometric error.
    #[error(transparent)]
    Geom(#[from] GeomError),
}
