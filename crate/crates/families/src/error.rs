//! Error type for family construction, evaluation and decomposition.

use geom_core::GeomError;
use thiserror::Error;

/// Errors produced by the family algebra.
#[derive(Debug, Error)]
pub enum FamiliesError {
    /// No builtin family has the requested label.
    #[error("unknown family label {label} (expected identity, scaling, aliquot or nedian)")]
    UnknownLabel { label: String },

    /// The generating triple sums to (numerically) zero at this
    /// parameter, so the barycentric rows describe points at infinity.
    #[error("family weight sum {sum:e} vanishes at t = {t}")]
    ZeroWeightSum { t: f64, sum: f64 },

    /// A generating function evaluated to a non-finite value.
    #[error("family evaluation is not finite at t = {t}")]
    NonFiniteEvaluation { t: f64 },

    /// The vertices at this parameter are collinear, so no side lengths
    /// or oriented triangle exist (the centroid still does).
    #[error("family triangle is degenerate at t = {t}")]
    DegenerateFamilyTriangle { t: f64 },

    /// A sampled construction-time invariant failed.
    #[error("invalid family {label}: {reason}")]
    InvalidFamily { label: String, reason: String },

    /// The family fails the decomposability semi-decision: its delta
    /// vanishes at a parameter where the generating triple has genuine
    /// spread.
    #[error(
        "family is not decomposable: delta vanishes at t = {t} where the \
         normalized triple has spread {spread:e}"
    )]
    NotDecomposable { t: f64, spread: f64 },

    /// A serialized family string could not be parsed.
    #[error("cannot parse family: {reason}")]
    Parse { reason: String },

    /// Serialization was requested for a family without polynomial
    /// generating functions.
    #[error("family {label} has no polynomial representation to serialize")]
    NotPolynomial { label: String },

    /// An underlying geometric operation failed.
    #[error(transparent)]
    Geom(#[from] GeomError),
}
