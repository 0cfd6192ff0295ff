//! Error type for curve tracing, frames, and verification.

use thiserror::Error;

/// Errors raised while tracing centers, building shear frames, or
/// registering curves.
#[derive(Debug, Error)]
pub enum CurvesError {
    /// Every sample of a trace was flagged as a pole or degeneracy.
    #[error("no usable samples: all {samples} grid points poled or degenerate for {center} along {family}")]
    AllSamplesPoled {
        center: String,
        family: String,
        samples: usize,
    },

    /// The parameter grid was empty.
    #[error("parameter grid is empty")]
    EmptyGrid,

    /// A shear frame axis vanished or the axes are (near-)parallel.
    #[error("degenerate shear frame: {reason}")]
    DegenerateFrame { reason: String },

    /// Both coefficients of a member specification are zero.
    #[error("omega member coefficients must not both be zero")]
    ZeroOmegaCoefficients,

    /// A member specification string could not be parsed.
    #[error("invalid omega member specification {text:?}: {reason}")]
    InvalidOmegaSpec { text: String, reason: String },

    /// Anchor points for a registration were coincident or collinear.
    #[error("registration anchors are degenerate: {reason}")]
    DegenerateAnchors { reason: String },

    /// Fewer triangles were supplied than a verification requires.
    #[error("verification requires at least {required} triangles, got {got}")]
    NotEnoughTriangles { required: usize, got: usize },

    #[error(transparent)]
    Centers(#[from] centers::CentersError),

    #[error(transparent)]
    Families(#[from] families::FamiliesError),

    #[error(transparent)]
    Geom(#[from] geom_core::GeomError),
}
