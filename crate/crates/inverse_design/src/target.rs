//! Polar target curves `t ↦ (r(t), θ(t))` on a sub-interval of
//! `(−3π/2, 3π/2)`.
//!
//! The angle bound is not cosmetic: the design formulas evaluate `θ/3`
//! directly, without angle unwrapping, so targets whose angle leaves
//! the interval are rejected at construction.

use std::sync::Arc;

use geom_core::{Point2, Real};

use crate::error::InverseDesignError;

/// Open bound `3π/2` on both the parameter interval and the angle map.
pub const ANGLE_LIMIT: f64 = 1.5 * std::f64::consts::PI;

/// Radii below this floor may not be sampled: the designed family
/// collapses to the centroid as `r → 0` and the target direction
/// becomes meaningless there.
pub const MIN_TARGET_RADIUS: f64 = 1e-6;

/// Construction-time scan density for the angle and radius maps.
const DOMAIN_SCAN_SAMPLES: usize = 513;

type TargetFn<R> = Arc<dyn Fn(&R) -> R + Send + Sync>;

/// A polar plane curve `t ↦ r(t)·(cos θ(t), sin θ(t))` used as the
/// shape a designed triangle family should make a center trace out.
#[derive(Clone)]
pub struct PolarTarget<R> {
    pub(crate) radius: TargetFn<R>,
    pub(crate) angle: TargetFn<R>,
    domain: (f64, f64),
}

impl<R> std::fmt::Debug for PolarTarget<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PolarTarget")
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

impl<R: Real> PolarTarget<R> {
    /// Builds a target from radius and angle maps over `domain`,
    /// validating the domain bound and scanning the angle map for
    /// range violations.
    pub fn new<F, G>(radius: F, angle: G, domain: (f64, f64)) -> Result<Self, InverseDesignError>
    where
        F: Fn(&R) -> R + Send + Sync + 'static,
        G: Fn(&R) -> R + Send + Sync + 'static,
    {
        let target = PolarTarget {
            radius: Arc::new(radius),
            angle: Arc::new(angle),
            domain,
        };
        target.validate()?;
        Ok(target)
    }

    /// The rose target `r = amplitude·cos(petals·t)`, `θ = t`, over the
    /// full admissible parameter interval.
    pub fn rose(amplitude: f64, petals: i32) -> Result<Self, InverseDesignError> {
        if amplitude == 0.0 || !amplitude.is_finite() {
            return Err(InverseDesignError::ZeroAmplitude);
        }
        let radius =
            move |t: &R| R::from_f64(amplitude) * (R::from_i32(petals) * t.clone()).cos();
        let angle = |t: &R| t.clone();
        let limit = ANGLE_LIMIT * (1.0 - 1e-12);
        Self::new(radius, angle, (-limit, limit))
    }

    /// Builds a target from `(t, r, θ)` rows interpolated piecewise
    /// linearly; the domain is the span of the tabulated parameters.
    pub fn from_table(rows: &[(f64, f64, f64)]) -> Result<Self, InverseDesignError> {
        if rows.len() < 2 {
            return Err(InverseDesignError::InvalidTable {
                reason: format!("need at least 2 rows, found {}", rows.len()),
            });
        }
        for (i, &(t, r, theta)) in rows.iter().enumerate() {
            if !(t.is_finite() && r.is_finite() && theta.is_finite()) {
                return Err(InverseDesignError::InvalidTable {
                    reason: format!("non-finite entry in row {i}"),
                });
            }
            if i > 0 && !(t > rows[i - 1].0) {
                return Err(InverseDesignError::InvalidTable {
                    reason: format!("parameters must be strictly increasing at row {i}"),
                });
            }
            if theta.abs() >= ANGLE_LIMIT {
                return Err(InverseDesignError::AngleOutOfRange { t, theta });
            }
        }
        let domain = (rows[0].0, rows[rows.len() - 1].0);
        let table: Arc<Vec<(f64, f64, f64)>> = Arc::new(rows.to_vec());
        let radius_table = Arc::clone(&table);
        let radius = move |t: &R| interpolate(&radius_table, t, |row| row.1);
        let angle = move |t: &R| interpolate(&table, t, |row| row.2);
        Self::new(radius, angle, domain)
    }

    fn validate(&self) -> Result<(), InverseDesignError> {
        let (lo, hi) = self.domain;
        if !(lo.is_finite() && hi.is_finite() && lo < hi && -ANGLE_LIMIT < lo && hi < ANGLE_LIMIT)
        {
            return Err(InverseDesignError::InvalidDomain { lo, hi });
        }
        for i in 0..DOMAIN_SCAN_SAMPLES {
            let t = lo + (hi - lo) * (i as f64) / ((DOMAIN_SCAN_SAMPLES - 1) as f64);
            let tr = R::from_f64(t);
            let theta = (self.angle)(&tr).to_f64();
            if !theta.is_finite() || theta.abs() >= ANGLE_LIMIT {
                return Err(InverseDesignError::AngleOutOfRange { t, theta });
            }
            if !(self.radius)(&tr).is_finite() {
                return Err(InverseDesignError::NonFiniteRadius { t });
            }
        }
        Ok(())
    }

    /// The parameter interval.
    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    /// The raw radius at `t`.
    pub fn radius(&self, t: &R) -> R {
        (self.radius)(t)
    }

    /// The angle at `t`.
    pub fn angle(&self, t: &R) -> R {
        (self.angle)(t)
    }

    /// The radius at `t`, enforcing the sampling floor
    /// [`MIN_TARGET_RADIUS`].
    pub fn checked_radius(&self, t: &R) -> Result<R, InverseDesignError> {
        let r = (self.radius)(t);
        let rf = r.to_f64();
        if !rf.is_finite() {
            return Err(InverseDesignError::NonFiniteRadius { t: t.to_f64() });
        }
        if rf.abs() <= MIN_TARGET_RADIUS {
            return Err(InverseDesignError::RadiusBelowFloor {
                t: t.to_f64(),
                r: rf,
                floor: MIN_TARGET_RADIUS,
            });
        }
        Ok(r)
    }

    /// The plane point `r(t)·(cos θ(t), sin θ(t))`.
    pub fn point(&self, t: &R) -> Point2<R> {
        let r = (self.radius)(t);
        let theta = (self.angle)(t);
        Point2::new(r.clone() * &theta.cos(), r * &theta.sin())
    }
}

/// Piecewise-linear interpolation of one table column, clamped to the
/// tabulated parameter span.
fn interpolate<R: Real>(
    table: &[(f64, f64, f64)],
    t: &R,
    column: impl Fn(&(f64, f64, f64)) -> f64,
) -> R {
    let tf = t.to_f64();
    let first = &table[0];
    let last = &table[table.len() - 1];
    if !(tf > first.0) {
        return R::from_f64(column(first));
    }
    if !(tf < last.0) {
        return R::from_f64(column(last));
    }
    let hi = table.partition_point(|row| row.0 < tf).max(1);
    let (t0, row0, row1) = (table[hi - 1].0, &table[hi - 1], &table[hi]);
    let dt = R::from_f64(row1.0 - t0);
    let w = (t.clone() - &R::from_f64(t0)) / &dt;
    let v0 = R::from_f64(column(row0));
    let v1 = R::from_f64(column(row1));
    v0.clone() + &((v1 - &v0) * &w)
}
