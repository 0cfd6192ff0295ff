//! Scale-relative tolerance policy.
//!
//! Geometric predicates in this workspace compare against tolerances
//! proportional to a local scale rather than against absolute constants,
//! which keeps every check independent of the length unit. This module is
//! the single source of truth for those factors.

/// Degeneracy factor for triangles. A triangle is treated as degenerate
/// when its area (or the determinant of its edge matrix) falls below this
/// factor times the square of its longest side.
pub const EPS_DEGENERATE_FACTOR: f64 = 1e-12;

/// Point-at-infinity factor for homogeneous weights. A weight sum whose
/// magnitude is below this factor times the largest weight magnitude is
/// rejected as projectively infinite.
pub const EPS_PROJ_FACTOR: f64 = 1e-12;

/// Absolute tolerance on the sum of normalized homogeneous weights: a
/// triple counts as normalized when its sum is within this distance of 1.
pub const EPS_NORM: f64 = 1e-9;

/// Default relative tolerance for comparisons of derived quantities such
/// as reconstructed side lengths.
pub const EPS_REL: f64 = 1e-10;
