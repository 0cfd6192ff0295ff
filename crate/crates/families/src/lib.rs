//! One-parameter triangle families and their group structure.
//!
//! A triangle family assigns to each parameter `t` a triangle whose
//! vertices are cyclic barycentric rows `[Ψ1:Ψ2:Ψ3]`, `[Ψ3:Ψ1:Ψ2]`,
//! `[Ψ2:Ψ3:Ψ1]` of a generating triple relative to a reference
//! triangle. The crate provides:
//!
//! - [`TriangleFamily`]: polynomial or closure-backed generating
//!   triples with domains, declared poles, validation, and a plain-text
//!   serialization format;
//! - the builtin identity, scaling, aliquot, and nedian families;
//! - [`family_triangle`]: placing the family triangle at a parameter,
//!   with degeneracy flagged rather than failed;
//! - [`concat`] and [`inverse`]: the commutative group operations on
//!   generating triples (exact coefficient arithmetic for polynomial
//!   families);
//! - [`decomposability_report`] and [`decompose`]: testing whether a
//!   family is a scaling of an aliquot family (`δ = 2Ψ1−Ψ2−Ψ3`
//!   vanishing only at centroid collapses) and extracting the scaling
//!   factor `σ(t)` and aliquot parameter `τ(t)`;
//! - seeded random family generators for statistical test suites.

pub mod error;
pub mod family;
pub mod ops;
pub mod polynomial;
pub mod sampling;

pub use error::FamiliesError;
pub use family::{normalized_spread, TriangleFamily, DEFAULT_DOMAIN, POLE_EXCLUSION_RADIUS};
pub use ops::{
    concat, concat_triples, decompose, decomposability_report, delta, delta_triple,
    family_triangle, inverse, DecomposabilityReport, DecomposabilityVerdict, DeltaZero,
    FamilyDecomposition, FamilyTriangle,
};
pub use polynomial::Polynomial;
pub use sampling::{random_decomposable_family, random_polynomial_family};
