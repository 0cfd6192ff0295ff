//! Triangle center functions and their algebra.
//!
//! A center function `ψ(a, b, c)` is homogeneous of some degree and
//! symmetric in its last two arguments; evaluating it cyclically yields
//! the homogeneous trilinear coordinates
//! `[ψ(a,b,c) : ψ(b,c,a) : ψ(c,a,b)]` of a triangle center. This crate
//! provides:
//!
//! - [`CenterFunction`] and [`CyclicFactor`]: opaque evaluators with
//!   degree and traceability metadata.
//! - [`catalog`]: named centers (incenter, centroid, circumcenter,
//!   symmedian point, Feuerbach point, the isogonic and isodynamic
//!   points, and a family of Brocard-axis centers) stored in polynomial
//!   or radical side-length form.
//! - The trace `Σψ = a·ψ(a,b,c) + b·ψ(b,c,a) + c·ψ(c,a,b)`,
//!   normalization by the trace, and [`isogonal_conjugate`].
//! - Affine combination machinery: [`cyclic_affine`] (coefficients that
//!   are cyclic functions of the sides) and [`constant_affine`]
//!   (constant coefficients), plus the closed-form recovery
//!   [`cyclic_coefficients_of_collinear`].
//! - [`brocard_rows`]: the representation of each Brocard-axis catalog
//!   center over the circumcenter/symmedian pair, with the
//!   constant-affine identity table relating those representations.
//! - Sampled semi-decision reports: [`traceability_report`] and
//!   [`essential_difference_report`].
//!
//! All evaluators are pure and immutable; everything here is safe for
//! concurrent use.

mod brocard;
mod catalog;
mod error;
mod function;
mod ops;
mod reports;
pub mod sampling;

pub use brocard::{
    brocard_member, brocard_rows, constant_affine_identities, constant_affine_member, BrocardRow,
    ConstantAffineIdentity,
};
pub use catalog::{catalog, CatalogEntry, CenterCatalog};
pub use error::CentersError;
pub use function::{CenterFunction, CyclicFactor, Traceability};
pub use ops::{
    center_point, center_trilinears, constant_affine, cyclic_affine,
    cyclic_coefficients_of_collinear, isogonal_conjugate, normalize, scaled_center, trace,
};
pub use reports::{
    essential_difference_report, traceability_report, validate_center_invariants,
    EssentialDifferenceReport, EssentialDifferenceVerdict, InvariantsReport, TraceabilityReport,
    TraceabilityVerdict,
};
