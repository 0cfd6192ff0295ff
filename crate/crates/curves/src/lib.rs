//! Trisectrix curve traces of triangle centers.
//!
//! A one-parameter family of triangles drags every triangle center
//! along a plane curve. For traceable centers that curve is always an
//! affine image of a trisectrix: the aliquot family yields the
//! Maclaurin trisectrix, the nedian family the Limaçon trisectrix, and
//! any scaling∘aliquot-decomposable family a σ/τ-reparametrization of
//! the Maclaurin shape. This crate traces the curves, builds the shear
//! frames that normalize them, verifies (semi-)invariance, and
//! registers curves across reference triangles by similarity or
//! affine fits.
//!
//! The special quadruple — both isogonic points and both isodynamic
//! points — additionally has orthogonal frames with the √3 : 1 shear
//! ratio, making their traces similar (not merely affinely equivalent)
//! across all reference triangles.

mod error;
mod frame;
mod omega;
mod register;
mod trace;
mod trisectrix;
mod verify;

pub use error::CurvesError;
pub use frame::{shear_frame, sheared_trisectrix_point, ShearFrame};
pub use omega::{omega_center, omega_inv_specs, OmegaKind, OmegaSpec};
pub use register::{
    register_affine, register_similarity, AffineRegistration, CurveRegistrationReport,
    SimilarityRegistration,
};
pub use trace::{
    center_at, default_grid, trace_center, uniform_grid, CurveSample, SampleFlag, TracedCurve,
    DEFAULT_GRID_MAX, DEFAULT_GRID_MIN, DEFAULT_GRID_SAMPLES,
};
pub use trisectrix::{
    limacon_implicit_residual, limacon_point, maclaurin_implicit_residual, maclaurin_point,
    nedian_shape_curve, ShapeCurve,
};
pub use verify::{
    frame_condition_checks, local_property_suite, verify_invariance, verify_semi_invariance,
    FrameConditionCheck, InvarianceReport, LocalPropertyCheck, SemiInvarianceReport,
    TriangleResiduals, DEFAULT_FRAME_TOL, DEFAULT_SEMI_TOL, LOCAL_PROPERTY_TOL,
};
