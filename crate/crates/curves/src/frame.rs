//! The shear frame attached to a traceable center: the affine frame in
//! which trisectrix traces become the unit-scale shape curves.

use centers::{center_point, CenterFunction};
use families::TriangleFamily;
use geom_core::{Point2, Real, Triangle, Vec2};

use crate::error::CurvesError;
use crate::trace::center_at;
use crate::trisectrix::ShapeCurve;

/// Relative floor below which a frame vector counts as vanishing.
const FRAME_NORM_REL: f64 = 1e-9;

/// Relative floor on the frame determinant `|vx × vy|`.
const FRAME_DET_REL: f64 = 1e-12;

/// Affine frame `p ↦ origin + lx·vx + ly·vy`.
///
/// For a center `ψ` on a reference triangle the frame is anchored at
/// `X_ψ`, with `vx` pointing to the centroid and `vy` from the
/// centroid to the image of `ψ` on the aliquot triangle at parameter
/// one third.
#[derive(Clone, Debug)]
pub struct ShearFrame<R> {
    pub origin: Point2<R>,
    pub vx: Vec2<R>,
    pub vy: Vec2<R>,
}

impl<R: Real> ShearFrame<R> {
    /// The image of shape coordinates `(lx, ly)` in the plane.
    pub fn map(&self, lx: &R, ly: &R) -> Point2<R> {
        self.origin
            .translate(&self.vx.scale(lx).add(&self.vy.scale(ly)))
    }

    /// Frame scale: the longer of the two frame vectors.
    pub fn scale(&self) -> R {
        self.vx.norm().max_of(&self.vy.norm())
    }

    /// `|vx·vy| / (|vx||vy|)` — zero exactly when the frame is
    /// orthogonal. Returns zero when either vector vanishes.
    pub fn orthogonality_residual(&self) -> R {
        let denom = self.vx.norm() * &self.vy.norm();
        if !(denom > R::zero()) {
            return R::zero();
        }
        self.vx.dot(&self.vy).abs() / &denom
    }

    /// `||vx|² − 3|vy|²| / |vx|²` — zero exactly when the frame has
    /// the √3 : 1 shear ratio. Returns zero when both vectors vanish
    /// and one when only `vx` does.
    pub fn ratio_residual(&self) -> R {
        let nx = self.vx.norm_sq();
        let ny = self.vy.norm_sq();
        if !(nx > R::zero()) {
            return if ny > R::zero() { R::one() } else { R::zero() };
        }
        (nx.clone() - &(R::from_f64(3.0) * &ny)).abs() / &nx
    }

    /// Shape coordinates of a plane point: solves
    /// `origin + lx·vx + ly·vy = p`. Fails on a singular frame.
    pub fn pullback(&self, p: &Point2<R>) -> Result<(R, R), CurvesError> {
        let det = self.vx.cross(&self.vy);
        let floor = R::from_f64(FRAME_DET_REL) * &(self.vx.norm() * &self.vy.norm());
        if !(det.abs() > floor) {
            return Err(CurvesError::DegenerateFrame {
                reason: "frame vectors are collinear or vanish".to_owned(),
            });
        }
        let d = p.sub(&self.origin);
        let lx = (d.x.clone() * &self.vy.y - &(d.y.clone() * &self.vy.x)) / &det;
        let ly = (self.vx.x.clone() * &d.y - &(self.vx.y.clone() * &d.x)) / &det;
        Ok((lx, ly))
    }
}

/// The frame of `psi` on `reference`, without any well-formedness
/// checks; verification code inspects the raw vectors directly.
pub(crate) fn raw_shear_frame<R: Real>(
    psi: &CenterFunction<R>,
    reference: &Triangle<R>,
) -> Result<ShearFrame<R>, CurvesError> {
    let sides = reference.side_lengths()?;
    let origin = center_point(psi, &sides, reference)?;
    let centroid = reference.centroid();
    let family = TriangleFamily::<R>::aliquot();
    let third = R::one() / &R::from_f64(3.0);
    let image = center_at(reference, psi, &family, &third)?;
    let vx = centroid.sub(&origin);
    let vy = image.sub(&centroid);
    Ok(ShearFrame { origin, vx, vy })
}

/// The frame of `psi` on `reference`, validated: both frame vectors
/// must be resolvably nonzero and non-collinear. Centers that sit at
/// the centroid (so the frame collapses) are rejected.
pub fn shear_frame<R: Real>(
    psi: &CenterFunction<R>,
    reference: &Triangle<R>,
) -> Result<ShearFrame<R>, CurvesError> {
    let frame = raw_shear_frame(psi, reference)?;
    let floor = R::from_f64(FRAME_NORM_REL) * &reference.longest_side();
    let nx = frame.vx.norm();
    let ny = frame.vy.norm();
    if !(nx > floor) || !(ny > floor) {
        return Err(CurvesError::DegenerateFrame {
            reason: format!(
                "frame vector norms {} and {} below {}",
                nx.to_f64(),
                ny.to_f64(),
                floor.to_f64()
            ),
        });
    }
    let det = frame.vx.cross(&frame.vy).abs();
    if !(det > R::from_f64(FRAME_DET_REL) * &(nx.clone() * &ny)) {
        return Err(CurvesError::DegenerateFrame {
            reason: "frame vectors are collinear".to_owned(),
        });
    }
    Ok(frame)
}

/// A shape-curve point carried into the plane by a frame.
pub fn sheared_trisectrix_point<R: Real>(
    frame: &ShearFrame<R>,
    shape: &ShapeCurve<R>,
    t: &R,
) -> Point2<R> {
    let (lx, ly) = shape.eval(t);
    frame.map(&lx, &ly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use centers::catalog;
    use geom_core::{canonical_placement, SideLengths};

    fn reference() -> Triangle<f64> {
        canonical_placement(&SideLengths::new(3.0, 4.0, 5.0).unwrap()).unwrap()
    }

    #[test]
    fn isogonic_frame_matches_pinned_values() {
        let reference = reference();
        let cat = catalog::<f64>();
        let frame = shear_frame(cat.get("X13").unwrap(), &reference).unwrap();
        assert!((frame.origin.x - 3.09407483663304968628538215593).abs() < 1e-12);
        assert!((frame.origin.y - 1.38158599434334339493934487555).abs() < 1e-12);
        assert!((frame.vx.x - -0.360741503299716352952048822597).abs() < 1e-12);
        assert!((frame.vx.y - -0.581585994343343394939344875548).abs() < 1e-12);
        assert!((frame.vy.x - -0.335778830391045476232773971938).abs() < 1e-12);
        assert!((frame.vy.y - 0.208274204037961507353952662721).abs() < 1e-12);
    }

    #[test]
    fn isogonic_frame_is_orthogonal_with_ratio_three() {
        let reference = reference();
        let cat = catalog::<f64>();
        let frame = shear_frame(cat.get("X13").unwrap(), &reference).unwrap();
        assert!(frame.orthogonality_residual() < 1e-12);
        assert!(frame.ratio_residual() < 1e-12);
    }

    #[test]
    fn centroid_frame_is_rejected() {
        let reference = reference();
        let cat = catalog::<f64>();
        let err = shear_frame(cat.get("X2").unwrap(), &reference).unwrap_err();
        assert!(matches!(err, CurvesError::DegenerateFrame { .. }));
    }

    #[test]
    fn map_and_pullback_are_inverse() {
        let reference = reference();
        let cat = catalog::<f64>();
        let frame = shear_frame(cat.get("X3").unwrap(), &reference).unwrap();
        for (lx, ly) in [(0.0, 0.0), (1.0, 1.0), (-0.4, 2.5), (3.0, -1.25)] {
            let p = frame.map(&lx, &ly);
            let (bx, by) = frame.pullback(&p).unwrap();
            assert!((bx - lx).abs() < 1e-12);
            assert!((by - ly).abs() < 1e-12);
        }
    }

    #[test]
    fn circumcenter_frame_violates_the_shear_conditions() {
        let reference = reference();
        let cat = catalog::<f64>();
        let frame = shear_frame(cat.get("X3").unwrap(), &reference).unwrap();
        let worst = frame
            .orthogonality_residual()
            .max(frame.ratio_residual());
        assert!(worst > 1e-3, "worst residual {worst}");
    }

    #[test]
    fn sheared_origin_is_the_frame_origin() {
        let reference = reference();
        let cat = catalog::<f64>();
        let frame = shear_frame(cat.get("X13").unwrap(), &reference).unwrap();
        let shape = ShapeCurve::<f64>::maclaurin();
        let p = sheared_trisectrix_point(&frame, &shape, &0.0);
        assert!(p.dist(&frame.origin) < 1e-14);
        // t = 1/3 lands at origin + vx + vy.
        let q = sheared_trisectrix_point(&frame, &shape, &(1.0 / 3.0));
        let anchor = frame.map(&1.0, &1.0);
        assert!(q.dist(&anchor) < 1e-12);
    }
}
