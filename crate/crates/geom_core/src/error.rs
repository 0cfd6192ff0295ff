//! Error type shared by the geometric constructors and conversions.

use thiserror::Error;

/// Errors produced by triangle validation and projective conversions.
///
/// Diagnostic payloads are carried as `f64` regardless of the scalar type
/// in use; they are for reporting only and never feed back into
/// computation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    /// A side length was zero, negative, or not finite.
    #[error("side lengths must be positive and finite, got ({a}, {b}, {c})")]
    NonPositiveSide { a: f64, b: f64, c: f64 },

    /// The strict triangle inequality failed for the given side lengths.
    #[error("triangle inequality violated for sides ({a}, {b}, {c})")]
    TriangleInequality { a: f64, b: f64, c: f64 },

    /// A triangle collapsed below the degeneracy tolerance.
    #[error("degenerate triangle: measure {measure:e} is within tolerance {tol:e} of zero")]
    DegenerateTriangle { measure: f64, tol: f64 },

    /// Homogeneous weights summed to (numerically) zero, so the described
    /// point lies at infinity.
    #[error("point at infinity: weight sum {sum:e} is within tolerance {tol:e} of zero")]
    PointAtInfinity { sum: f64, tol: f64 },

    /// A coordinate triple was identically zero, which does not describe a
    /// projective point.
    #[error("homogeneous coordinates must not be all zero")]
    ZeroVector,

    /// A vertex coordinate was NaN or infinite.
    #[error("vertex coordinates must be finite")]
    NonFiniteVertex,
}
