//! Error type for target construction and family design.

use thiserror::Error;

/// Errors produced while building polar targets, designed families, or
/// verifying that a traced center reproduces its target curve.
#[derive(Debug, Error)]
pub enum InverseDesignError {
    /// The parameter interval is empty, unbounded, or leaves the open
    /// interval `(−3π/2, 3π/2)` on which the design formulas hold.
    #[error("target domain [{lo}, {hi}] is not a finite interval inside (\u{2212}3\u{03c0}/2, 3\u{03c0}/2)")]
    InvalidDomain { lo: f64, hi: f64 },

    /// The angle map left `(−3π/2, 3π/2)` at a sampled parameter.
    #[error("target angle {theta} at t = {t} leaves (\u{2212}3\u{03c0}/2, 3\u{03c0}/2)")]
    AngleOutOfRange { t: f64, theta: f64 },

    /// The radius map produced a NaN or infinity.
    #[error("target radius is not finite at t = {t}")]
    NonFiniteRadius { t: f64 },

    /// A sampled radius sits below the floor under which the designed
    /// family collapses to the centroid and the target direction is
    /// unresolved.
    #[error("target radius {r} at t = {t} is below the sampling floor {floor}")]
    RadiusBelowFloor { t: f64, r: f64, floor: f64 },

    /// Rose curves need a nonzero amplitude.
    #[error("rose amplitude must be finite and nonzero")]
    ZeroAmplitude,

    /// The aliquot-parameter branch function has a pole where
    /// `−1 + 2cos(2θ/3)` vanishes.
    #[error("decomposition branch pole at t = {t}: \u{2212}1 + 2cos(2\u{03b8}/3) = {denominator}")]
    BranchPole { t: f64, denominator: f64 },

    /// A tabulated target was malformed.
    #[error("invalid target table: {reason}")]
    InvalidTable { reason: String },

    /// Frame-based verification needs a visibly non-equilateral
    /// triangle; near the equilateral shape the frames collapse.
    #[error("triangle with sides {sides:?} is too close to equilateral for frame-based verification")]
    NearEquilateral { sides: [f64; 3] },

    #[error(transparent)]
    Geom(#[from] geom_core::GeomError),

    #[error(transparent)]
    Centers(#[from] centers::CentersError),

    #[error(transparent)]
    Families(#[from] families::FamiliesError),

    #[error(transparent)]
    Curves(#[from] curves::CurvesError),
}
