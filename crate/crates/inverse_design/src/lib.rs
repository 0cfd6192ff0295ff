//! Inverse design of triangle families from polar target curves.
//!
//! The forward theory traces a triangle center along a one-parameter
//! triangle family and obtains a plane curve. This crate runs the
//! construction backwards: given a polar curve
//! `t ↦ r(t)·(cos θ(t), sin θ(t))` with `t` in a sub-interval of
//! `(−3π/2, 3π/2)`, it builds the generating triple
//!
//! ```text
//! Ψ1 = 1 + r(cos(θ/3) + √3 sin(θ/3))
//! Ψ2 = 1 + r(cos(θ/3) − √3 sin(θ/3))
//! Ψ3 = 1 − 2r cos(θ/3)
//! ```
//!
//! whose family makes every traceable pencil member draw the target:
//! invariant-quadruple centers (the isogonic and isodynamic points)
//! draw a similar copy, and all other semi-invariant members draw a
//! fixed sheared copy determined by their shear frame.
//!
//! The crate also exposes the branch functions `σ(t)`, `τ(t)` writing
//! the designed family as homothety ∘ aliquot, the rose-curve family
//! `r = a·cos(nt)`, tabulated targets for configuration files, and a
//! verifier that traces a member and measures the registration
//! residual against the target.

mod design;
mod error;
mod target;
mod verify;

pub use design::{
    family_from_target, rose_family, sigma_tau_from_target, TargetDecomposition, BRANCH_POLE_EPS,
};
pub use error::InverseDesignError;
pub use target::{PolarTarget, ANGLE_LIMIT, MIN_TARGET_RADIUS};
pub use verify::{
    is_invariant_spec, is_near_equilateral, verify_target_reproduction, ReproductionMethod,
    ReproductionReport, EQUILATERAL_MARGIN,
};
