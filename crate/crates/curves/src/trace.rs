//! Tracing triangle centers along one-parameter triangle families.

use centers::{center_point, CenterFunction};
use families::{family_triangle, TriangleFamily};
use geom_core::{Point2, Real, SideLengths, Triangle};

use crate::error::CurvesError;

/// Default parameter grid bounds: covers the interpolation parameters
/// 0 and 1 of the aliquot and nedian families with margin on each side.
pub const DEFAULT_GRID_MIN: f64 = -0.5;
pub const DEFAULT_GRID_MAX: f64 = 1.5;

/// Default number of grid samples.
pub const DEFAULT_GRID_SAMPLES: usize = 512;

/// Relative vertex-coincidence tolerance distinguishing a full collapse
/// (all vertices at one point, curve limit well defined) from a merely
/// collinear degenerate triangle.
const COLLAPSE_REL: f64 = 1e-9;

/// `n` uniformly spaced parameters on `[lo, hi]`.
pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let n = n.max(2);
    (0..n)
        .map(|i| lo + (hi - lo) * (i as f64) / ((n - 1) as f64))
        .collect()
}

/// The default 512-point grid on `[−0.5, 1.5]`.
pub fn default_grid() -> Vec<f64> {
    uniform_grid(DEFAULT_GRID_MIN, DEFAULT_GRID_MAX, DEFAULT_GRID_SAMPLES)
}

/// Status of one traced sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleFlag {
    /// Finite curve point.
    Ok,
    /// Center evaluation or projective normalization failed (point at
    /// or beyond the numeric horizon).
    Pole,
    /// The family triangle was degenerate at this parameter.
    Degenerate,
}

impl SampleFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            SampleFlag::Ok => "ok",
            SampleFlag::Pole => "pole",
            SampleFlag::Degenerate => "degenerate",
        }
    }
}

/// One traced sample; coordinates are NaN unless the flag is `Ok` or
/// the sample is a full collapse (where the limit point is recorded).
#[derive(Clone, Copy, Debug)]
pub struct CurveSample {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub flag: SampleFlag,
}

impl CurveSample {
    pub fn point(&self) -> Point2<f64> {
        Point2::new(self.x, self.y)
    }
}

/// A center traced along a family at a fixed reference triangle.
#[derive(Clone, Debug)]
pub struct TracedCurve {
    samples: Vec<CurveSample>,
    center_label: String,
    family_label: String,
    triangle: SideLengths<f64>,
}

impl TracedCurve {
    /// Assembles a curve from raw samples (for example, re-imported
    /// from an export). Parameters must be strictly increasing.
    pub fn from_samples(
        samples: Vec<CurveSample>,
        center_label: &str,
        family_label: &str,
        triangle: SideLengths<f64>,
    ) -> Result<Self, CurvesError> {
        if samples.is_empty() {
            return Err(CurvesError::EmptyGrid);
        }
        if samples.windows(2).any(|w| !(w[0].t < w[1].t)) {
            return Err(CurvesError::EmptyGrid);
        }
        Ok(TracedCurve {
            samples,
            center_label: center_label.to_owned(),
            family_label: family_label.to_owned(),
            triangle,
        })
    }

    /// All samples, in strictly increasing parameter order.
    pub fn samples(&self) -> &[CurveSample] {
        &self.samples
    }

    /// Samples with finite curve points.
    pub fn ok_samples(&self) -> impl Iterator<Item = &CurveSample> {
        self.samples
            .iter()
            .filter(|s| s.flag == SampleFlag::Ok)
    }

    pub fn center_label(&self) -> &str {
        &self.center_label
    }

    pub fn family_label(&self) -> &str {
        &self.family_label
    }

    /// Side lengths of the reference triangle the trace was computed on.
    pub fn triangle(&self) -> &SideLengths<f64> {
        &self.triangle
    }

    /// The sample whose parameter is closest to `t`, preferring `Ok`
    /// flags; `None` when no sample is usable.
    pub fn nearest_ok(&self, t: f64) -> Option<&CurveSample> {
        self.samples
            .iter()
            .filter(|s| s.flag == SampleFlag::Ok)
            .min_by(|a, b| (a.t - t).abs().total_cmp(&(b.t - t).abs()))
    }

    /// Largest distance of any finite sample from `center` — the curve
    /// scale used to normalize registration residuals.
    pub fn radius_about(&self, center: &Point2<f64>) -> f64 {
        self.ok_samples()
            .map(|s| s.point().dist(center))
            .fold(0.0, f64::max)
    }
}

/// Result of evaluating one (family, center, parameter) triple.
pub(crate) enum Sampled<R> {
    Point(Point2<R>),
    Collapse(Point2<R>),
    Pole,
    Degenerate,
}

pub(crate) fn sample_center<R: Real>(
    reference: &Triangle<R>,
    psi: &CenterFunction<R>,
    family: &TriangleFamily<R>,
    t: &R,
) -> Sampled<R> {
    let placed = match family_triangle(reference, family, t) {
        Ok(p) => p,
        Err(_) => return Sampled::Pole,
    };
    if placed.degenerate {
        // A full collapse has a well-defined limit: the common point.
        let eps = R::from_f64(COLLAPSE_REL) * reference.longest_side();
        let [v0, v1, v2] = &placed.vertices;
        if v0.dist(v1) <= eps && v1.dist(v2) <= eps && v2.dist(v0) <= eps {
            return Sampled::Collapse(placed.centroid());
        }
        return Sampled::Degenerate;
    }
    let triangle = match placed.triangle() {
        Ok(t) => t,
        Err(_) => return Sampled::Degenerate,
    };
    let sides = match triangle.side_lengths() {
        Ok(s) => s,
        Err(_) => return Sampled::Degenerate,
    };
    match center_point(psi, &sides, &triangle) {
        Ok(p) if p.is_finite() => Sampled::Point(p),
        _ => Sampled::Pole,
    }
}

/// Traces `psi` along `family` over the parameter grid. The grid is
/// sorted and deduplicated so sample parameters are strictly
/// increasing. Pole and degeneracy samples are flagged rather than
/// fatal; only a trace with no usable samples at all is an error.
pub fn trace_center<R: Real>(
    reference: &Triangle<R>,
    psi: &CenterFunction<R>,
    family: &TriangleFamily<R>,
    grid: &[f64],
) -> Result<TracedCurve, CurvesError> {
    if grid.is_empty() {
        return Err(CurvesError::EmptyGrid);
    }
    let mut ts: Vec<f64> = grid.iter().copied().filter(|t| t.is_finite()).collect();
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    if ts.is_empty() {
        return Err(CurvesError::EmptyGrid);
    }

    let mut samples = Vec::with_capacity(ts.len());
    let mut usable = 0usize;
    for &t in &ts {
        let sample = match sample_center(reference, psi, family, &R::from_f64(t)) {
            Sampled::Point(p) => {
                usable += 1;
                let p = p.to_f64();
                CurveSample {
                    t,
                    x: p.x,
                    y: p.y,
                    flag: SampleFlag::Ok,
                }
            }
            Sampled::Collapse(p) => {
                let p = p.to_f64();
                CurveSample {
                    t,
                    x: p.x,
                    y: p.y,
                    flag: SampleFlag::Degenerate,
                }
            }
            Sampled::Pole => CurveSample {
                t,
                x: f64::NAN,
                y: f64::NAN,
                flag: SampleFlag::Pole,
            },
            Sampled::Degenerate => CurveSample {
                t,
                x: f64::NAN,
                y: f64::NAN,
                flag: SampleFlag::Degenerate,
            },
        };
        samples.push(sample);
    }
    if usable == 0 {
        return Err(CurvesError::AllSamplesPoled {
            center: psi.id().unwrap_or("<anonymous>").to_owned(),
            family: family.label().to_owned(),
            samples: samples.len(),
        });
    }
    Ok(TracedCurve {
        samples,
        center_label: psi.id().unwrap_or("<anonymous>").to_owned(),
        family_label: family.label().to_owned(),
        triangle: reference
            .side_lengths()
            .map(|s| s.to_f64())
            .unwrap_or_else(|_| SideLengths::new(1.0, 1.0, 1.0).expect("unit sides")),
    })
}

/// The curve point at one parameter, treating a full collapse as its
/// limit point; poles and non-collapse degeneracies are errors.
pub fn center_at<R: Real>(
    reference: &Triangle<R>,
    psi: &CenterFunction<R>,
    family: &TriangleFamily<R>,
    t: &R,
) -> Result<Point2<R>, CurvesError> {
    match sample_center(reference, psi, family, t) {
        Sampled::Point(p) | Sampled::Collapse(p) => Ok(p),
        Sampled::Pole => Err(CurvesError::AllSamplesPoled {
            center: psi.id().unwrap_or("<anonymous>").to_owned(),
            family: family.label().to_owned(),
            samples: 1,
        }),
        Sampled::Degenerate => Err(CurvesError::DegenerateFrame {
            reason: format!("family triangle degenerate at t = {}", t.to_f64()),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use centers::catalog;
    use geom_core::canonical_placement;

    fn reference() -> Triangle<f64> {
        canonical_placement(&SideLengths::new(3.0, 4.0, 5.0).unwrap()).unwrap()
    }

    #[test]
    fn centroid_traces_a_constant_curve() {
        let reference = reference();
        let cat = catalog::<f64>();
        let psi = cat.get("X2").unwrap();
        let family = TriangleFamily::<f64>::nedian();
        let curve = trace_center(&reference, psi, &family, &uniform_grid(-0.5, 1.5, 101)).unwrap();
        let centroid = reference.centroid();
        let mut ok = 0;
        for s in curve.ok_samples() {
            assert!(s.point().dist(&centroid) < 1e-12);
            ok += 1;
        }
        assert!(ok >= 99); // the collapse sample at t = 1/2 is flagged
        // The collapse sample carries the limit point.
        let half = curve.samples().iter().find(|s| (s.t - 0.5).abs() < 1e-12);
        if let Some(s) = half {
            assert_eq!(s.flag, SampleFlag::Degenerate);
            assert!(s.point().dist(&centroid) < 1e-12);
        }
    }

    #[test]
    fn circumcenter_along_scaling_stays_on_the_euler_direction() {
        let reference = reference();
        let cat = catalog::<f64>();
        let psi = cat.get("X3").unwrap();
        let family = TriangleFamily::<f64>::scaling();
        let curve =
            trace_center(&reference, psi, &family, &uniform_grid(0.2, 1.5, 64)).unwrap();
        let sides = reference.side_lengths().unwrap();
        let x3 = center_point(psi, &sides, &reference).unwrap();
        let g = reference.centroid();
        let dir = x3.sub(&g);
        for s in curve.ok_samples() {
            let off = s.point().sub(&g);
            // Collinear with the segment X2–X3.
            let scale = (off.norm() * dir.norm()).max(1e-6);
            assert!(off.cross(&dir).abs() < 1e-10 * scale);
        }
    }

    #[test]
    fn isogonic_point_interpolates_at_the_aliquot_endpoints() {
        let reference = reference();
        let cat = catalog::<f64>();
        let psi = cat.get("X13").unwrap();
        let family = TriangleFamily::<f64>::aliquot();
        let sides = reference.side_lengths().unwrap();
        let x13 = center_point(psi, &sides, &reference).unwrap();
        for t in [0.0, 1.0] {
            let p = center_at(&reference, psi, &family, &t).unwrap();
            assert!(p.dist(&x13) < 1e-12 * reference.longest_side());
        }
    }

    #[test]
    fn empty_and_degenerate_grids_are_rejected() {
        let reference = reference();
        let cat = catalog::<f64>();
        let psi = cat.get("X2").unwrap();
        let family = TriangleFamily::<f64>::aliquot();
        assert!(matches!(
            trace_center(&reference, psi, &family, &[]),
            Err(CurvesError::EmptyGrid)
        ));
        assert!(matches!(
            trace_center(&reference, psi, &family, &[f64::NAN]),
            Err(CurvesError::EmptyGrid)
        ));
    }

    #[test]
    fn grids_are_sorted_and_deduplicated() {
        let reference = reference();
        let cat = catalog::<f64>();
        let psi = cat.get("X2").unwrap();
        let family = TriangleFamily::<f64>::aliquot();
        let curve =
            trace_center(&reference, psi, &family, &[0.5, 0.1, 0.5, 0.3]).unwrap();
        let ts: Vec<f64> = curve.samples().iter().map(|s| s.t).collect();
        assert_eq!(ts, vec![0.1, 0.3, 0.5]);
    }
}
