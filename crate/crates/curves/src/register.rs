//! Cross-triangle curve registration: similarity fits from two curve
//! anchors and affine fits from the shear frames.

use geom_core::Point2;

use crate::error::CurvesError;
use crate::frame::ShearFrame;
use crate::trace::TracedCurve;

/// Similarity anchors sit at these curve parameters (or the nearest
/// usable samples): the frame origin and the loop vertex image.
const ANCHOR_TS: [f64; 2] = [0.0, 1.0 / 3.0];

fn cmul(p: (f64, f64), q: (f64, f64)) -> (f64, f64) {
    (p.0 * q.0 - p.1 * q.1, p.0 * q.1 + p.1 * q.0)
}

fn cdiv(p: (f64, f64), q: (f64, f64)) -> (f64, f64) {
    let d = q.0 * q.0 + q.1 * q.1;
    ((p.0 * q.0 + p.1 * q.1) / d, (p.1 * q.0 - p.0 * q.1) / d)
}

/// Orientation-preserving (or, with `conjugate`, orientation-reversing)
/// similarity `z ↦ w0 + α·(z − z0)` determined by two anchor pairs.
#[derive(Clone, Debug)]
pub struct SimilarityRegistration {
    source_anchor: Point2<f64>,
    target_anchor: Point2<f64>,
    alpha: (f64, f64),
    conjugate: bool,
}

impl SimilarityRegistration {
    /// The similarity mapping `z0 ↦ w0` and `z1 ↦ w1` exactly. Both an
    /// orientation-preserving and an orientation-reversing similarity
    /// do so; `conjugate` selects which one to build.
    pub fn from_anchors(
        z0: &Point2<f64>,
        z1: &Point2<f64>,
        w0: &Point2<f64>,
        w1: &Point2<f64>,
        conjugate: bool,
    ) -> Result<Self, CurvesError> {
        let dz = z1.sub(z0);
        let dw = w1.sub(w0);
        if !(dz.norm() > 0.0) || !dz.is_finite() {
            return Err(CurvesError::DegenerateAnchors {
                reason: "source anchors coincide".to_owned(),
            });
        }
        if !dw.is_finite() {
            return Err(CurvesError::DegenerateAnchors {
                reason: "target anchors are not finite".to_owned(),
            });
        }
        let dz = if conjugate { (dz.x, -dz.y) } else { (dz.x, dz.y) };
        let alpha = cdiv((dw.x, dw.y), dz);
        Ok(SimilarityRegistration {
            source_anchor: z0.clone(),
            target_anchor: w0.clone(),
            alpha,
            conjugate,
        })
    }

    pub fn apply(&self, p: &Point2<f64>) -> Point2<f64> {
        let d = p.sub(&self.source_anchor);
        let d = if self.conjugate { (d.x, -d.y) } else { (d.x, d.y) };
        let (x, y) = cmul(self.alpha, d);
        Point2::new(self.target_anchor.x + x, self.target_anchor.y + y)
    }

    /// Magnification factor `|α|`.
    pub fn scale(&self) -> f64 {
        (self.alpha.0 * self.alpha.0 + self.alpha.1 * self.alpha.1).sqrt()
    }

    pub fn is_conjugate(&self) -> bool {
        self.conjugate
    }
}

/// Affine map `p ↦ o₂ + M·(p − o₁)` carrying one shear frame onto
/// another (`vx₁ ↦ vx₂`, `vy₁ ↦ vy₂`).
#[derive(Clone, Debug)]
pub struct AffineRegistration {
    source_origin: Point2<f64>,
    target_origin: Point2<f64>,
    m: [[f64; 2]; 2],
}

impl AffineRegistration {
    pub fn from_frames(
        source: &ShearFrame<f64>,
        target: &ShearFrame<f64>,
    ) -> Result<Self, CurvesError> {
        let det = source.vx.cross(&source.vy);
        let floor = 1e-12 * source.vx.norm() * source.vy.norm();
        if !(det.abs() > floor) {
            return Err(CurvesError::DegenerateFrame {
                reason: "source frame vectors are collinear or vanish".to_owned(),
            });
        }
        let (sx, sy) = (&source.vx, &source.vy);
        let (tx, ty) = (&target.vx, &target.vy);
        let m = [
            [
                (tx.x * sy.y - ty.x * sx.y) / det,
                (-tx.x * sy.x + ty.x * sx.x) / det,
            ],
            [
                (tx.y * sy.y - ty.y * sx.y) / det,
                (-tx.y * sy.x + ty.y * sx.x) / det,
            ],
        ];
        Ok(AffineRegistration {
            source_origin: source.origin.clone(),
            target_origin: target.origin.clone(),
            m,
        })
    }

    pub fn apply(&self, p: &Point2<f64>) -> Point2<f64> {
        let d = p.sub(&self.source_origin);
        Point2::new(
            self.target_origin.x + self.m[0][0] * d.x + self.m[0][1] * d.y,
            self.target_origin.y + self.m[1][0] * d.x + self.m[1][1] * d.y,
        )
    }
}

/// Outcome of registering one traced curve against another.
#[derive(Clone, Copy, Debug)]
pub struct CurveRegistrationReport {
    /// Largest distance between a mapped source sample and the target
    /// sample at the same parameter.
    pub max_residual: f64,
    /// Target curve radius about its registration anchor.
    pub scale: f64,
    /// `max_residual / scale` (or the absolute residual for a
    /// degenerate target).
    pub relative: f64,
    /// Whether the winning similarity was orientation-reversing
    /// (always `false` for affine registration).
    pub conjugate: bool,
    /// Number of samples compared.
    pub compared: usize,
}

/// Samples present and usable in both curves at identical parameters.
fn common_ok(
    source: &TracedCurve,
    target: &TracedCurve,
) -> Vec<(f64, Point2<f64>, Point2<f64>)> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0usize, 0usize);
    let (ss, ts) = (source.samples(), target.samples());
    while i < ss.len() && j < ts.len() {
        let (a, b) = (&ss[i], &ts[j]);
        if a.t < b.t {
            i += 1;
        } else if b.t < a.t {
            j += 1;
        } else {
            if a.flag == crate::trace::SampleFlag::Ok && b.flag == crate::trace::SampleFlag::Ok {
                out.push((a.t, a.point(), b.point()));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn anchor_indices(common: &[(f64, Point2<f64>, Point2<f64>)]) -> Result<(usize, usize), CurvesError> {
    let nearest = |target: f64| {
        common
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| (a.0 - target).abs().total_cmp(&(b.0 - target).abs()))
            .map(|(i, _)| i)
    };
    let i0 = nearest(ANCHOR_TS[0]);
    let i1 = nearest(ANCHOR_TS[1]);
    match (i0, i1) {
        (Some(i0), Some(i1)) if i0 != i1 => Ok((i0, i1)),
        _ => Err(CurvesError::DegenerateAnchors {
            reason: "fewer than two distinct usable anchor samples".to_owned(),
        }),
    }
}

fn report_for<F: Fn(&Point2<f64>) -> Point2<f64>>(
    common: &[(f64, Point2<f64>, Point2<f64>)],
    anchor: &Point2<f64>,
    conjugate: bool,
    apply: F,
) -> CurveRegistrationReport {
    let mut max_residual = 0.0f64;
    let mut scale = 0.0f64;
    for (_, z, w) in common {
        max_residual = max_residual.max(apply(z).dist(w));
        scale = scale.max(w.dist(anchor));
    }
    let relative = if scale > 0.0 {
        max_residual / scale
    } else {
        max_residual
    };
    CurveRegistrationReport {
        max_residual,
        scale,
        relative,
        conjugate,
        compared: common.len(),
    }
}

/// Registers `source` onto `target` with the two-anchor similarity,
/// trying both orientations and keeping the better one. Curves must
/// share grid parameters; flagged samples are skipped.
pub fn register_similarity(
    source: &TracedCurve,
    target: &TracedCurve,
) -> Result<CurveRegistrationReport, CurvesError> {
    let common = common_ok(source, target);
    let (i0, i1) = anchor_indices(&common)?;
    let (z0, w0) = (&common[i0].1, &common[i0].2);
    let (z1, w1) = (&common[i1].1, &common[i1].2);
    let floor_src = 1e-12 * source.triangle().longest();
    let floor_tgt = 1e-12 * target.triangle().longest();
    if !(z0.dist(z1) > floor_src) || !(w0.dist(w1) > floor_tgt) {
        return Err(CurvesError::DegenerateAnchors {
            reason: "anchor span is below the resolvable scale of the triangle".to_owned(),
        });
    }
    let mut best: Option<CurveRegistrationReport> = None;
    for conjugate in [false, true] {
        let fit = SimilarityRegistration::from_anchors(z0, z1, w0, w1, conjugate)?;
        let report = report_for(&common, w0, conjugate, |p| fit.apply(p));
        if best
            .map(|b| report.max_residual < b.max_residual)
            .unwrap_or(true)
        {
            best = Some(report);
        }
    }
    Ok(best.expect("two candidate orientations were evaluated"))
}

/// Registers `source` onto `target` with the affine map carrying the
/// source shear frame onto the target one.
pub fn register_affine(
    source: &TracedCurve,
    target: &TracedCurve,
    source_frame: &ShearFrame<f64>,
    target_frame: &ShearFrame<f64>,
) -> Result<CurveRegistrationReport, CurvesError> {
    let common = common_ok(source, target);
    if common.is_empty() {
        return Err(CurvesError::DegenerateAnchors {
            reason: "no usable samples shared by the two curves".to_owned(),
        });
    }
    let fit = AffineRegistration::from_frames(source_frame, target_frame)?;
    Ok(report_for(&common, &target_frame.origin, false, |p| {
        fit.apply(p)
    }))
}
