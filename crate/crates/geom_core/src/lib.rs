//! Foundation types for planar triangle geometry.
//!
//! This crate provides the scalar abstraction and the coordinate plumbing
//! shared by the rest of the workspace:
//!
//! - [`Real`]: a scalar trait implemented by `f64` and by the extended
//!   precision type [`BigReal`], so every construction can run in either
//!   double precision or a configurable big-float precision.
//! - [`Point2`] and [`Vec2`]: minimal Cartesian primitives.
//! - [`SideLengths`] and [`Triangle`]: validated triangle descriptions,
//!   together with [`heron_area`] (numerically stable Heron formula) and
//!   [`canonical_placement`] (side `c` on the x-axis, apex above it).
//! - [`Barycentric`] and [`Trilinear`]: homogeneous coordinates with
//!   conversions, projective normalization, and a collinearity test.
//! - [`tol`]: the scale-relative tolerance policy used across the
//!   workspace.
//!
//! # Conventions
//!
//! Side lengths are labelled opposite their vertices: `a = |BC|`,
//! `b = |CA|`, `c = |AB|`. Homogeneous coordinates are compared after
//! dividing by the component of largest magnitude, which removes the
//! projective scale and sign ambiguity. All operations are pure functions
//! over immutable values and are safe to use from multiple threads.

mod bigreal;
mod coords;
mod error;
mod point;
mod real;
mod triangle;

pub mod tol;

pub use bigreal::{precision_bits, set_precision_bits, BigReal, DEFAULT_PRECISION_BITS, MIN_PRECISION_BITS};
pub use coords::{
    bary_to_point, collinearity_residual, proportionality_residual3, trilinear_to_bary,
    unit_max_normalize3, Barycentric, Trilinear,
};
pub use error::GeomError;
pub use point::{Point2, Vec2};
pub use real::Real;
pub use triangle::{canonical_placement, heron_area, SideLengths, Triangle};
