//! Verification suites: semi-invariance of traced curves against the
//! frame-mapped trisectrix shapes, the shear-frame conditions, full
//! invariance, and the pointwise local properties of traceable centers.

use centers::{center_point, CenterFunction};
use families::{decompose, FamilyDecomposition, TriangleFamily};
use geom_core::{canonical_placement, Point2, Real, SideLengths, Triangle};

use crate::error::CurvesError;
use crate::frame::raw_shear_frame;
use crate::trace::{center_at, sample_center, Sampled};
use crate::trisectrix::{nedian_shape_curve, ShapeCurve};

/// Default relative tolerance on semi-invariance residuals.
pub const DEFAULT_SEMI_TOL: f64 = 1e-9;

/// Default relative tolerance on the two frame conditions.
pub const DEFAULT_FRAME_TOL: f64 = 1e-9;

/// Relative tolerance for the four local properties.
pub const LOCAL_PROPERTY_TOL: f64 = 1e-10;

/// Frame norms below this fraction of the longest side count as zero
/// (the center is numerically glued to the centroid).
const TRIVIAL_FRAME_REL: f64 = 1e-12;

/// Residual statistics of one triangle in a semi-invariance run. All
/// residuals are relative to the frame scale (or to the longest side
/// when the frame vanishes).
#[derive(Clone, Debug)]
pub struct TriangleResiduals {
    pub sides: [f64; 3],
    pub max_residual: f64,
    pub p99_residual: f64,
    pub ok_samples: usize,
    pub flagged_samples: usize,
}

/// Semi-invariance verdict over a collection of reference triangles.
#[derive(Clone, Debug)]
pub struct SemiInvarianceReport {
    pub per_triangle: Vec<TriangleResiduals>,
    pub tol: f64,
    pub semi_invariant: bool,
}

fn sides_f64<R: Real>(sides: &SideLengths<R>) -> [f64; 3] {
    [sides.a().to_f64(), sides.b().to_f64(), sides.c().to_f64()]
}

fn p99(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    let idx = ((0.99 * n as f64).ceil() as usize).saturating_sub(1).min(n - 1);
    sorted[idx]
}

/// The trisectrix shape curve matched to a family: the Maclaurin shape
/// for the aliquot family, the Limaçon shape for the nedian family
/// (whose direct form also covers the collapse parameter), and the
/// σ/τ-reparametrized Maclaurin shape for any other decomposable
/// family.
fn shape_for_family<R: Real>(
    family: &TriangleFamily<R>,
) -> Result<(ShapeCurve<R>, Option<FamilyDecomposition<R>>), CurvesError> {
    match family.label() {
        "aliquot" => Ok((ShapeCurve::maclaurin(), None)),
        "nedian" => Ok((nedian_shape_curve(1.0), None)),
        _ => {
            let dec = decompose(family)?;
            let s = dec.clone();
            let t = dec.clone();
            let shape = ShapeCurve::decomposed(
                move |x: &R| s.sigma(x),
                move |x: &R| t.tau(x),
            );
            Ok((shape, Some(dec)))
        }
    }
}

fn residuals_on_triangle<R: Real>(
    psi: &CenterFunction<R>,
    family: &TriangleFamily<R>,
    shape: &ShapeCurve<R>,
    decomposition: Option<&FamilyDecomposition<R>>,
    sides: &SideLengths<R>,
    grid: &[f64],
) -> Result<TriangleResiduals, CurvesError> {
    let reference = canonical_placement(sides)?;
    let frame = raw_shear_frame(psi, &reference)?;
    let longest = sides.longest();
    let frame_scale = frame.scale();
    let trivial_floor = R::from_f64(TRIVIAL_FRAME_REL) * &longest;
    let scale = if frame_scale > trivial_floor {
        frame_scale
    } else {
        longest
    }
    .to_f64();

    let mut residuals: Vec<f64> = Vec::with_capacity(grid.len());
    let mut flagged = 0usize;
    for &t in grid {
        if !t.is_finite() {
            flagged += 1;
            continue;
        }
        if decomposition.map(|d| d.is_singular(t)).unwrap_or(false) {
            flagged += 1;
            continue;
        }
        let tr = R::from_f64(t);
        let point = match sample_center(&reference, psi, family, &tr) {
            Sampled::Point(p) => p,
            _ => {
                flagged += 1;
                continue;
            }
        };
        let (lx, ly) = shape.eval(&tr);
        if !lx.is_finite() || !ly.is_finite() {
            flagged += 1;
            continue;
        }
        let image = frame.map(&lx, &ly);
        let residual = point.dist(&image).to_f64();
        if residual.is_finite() {
            residuals.push(residual / scale);
        } else {
            flagged += 1;
        }
    }
    if residuals.is_empty() {
        return Err(CurvesError::AllSamplesPoled {
            center: psi.id().unwrap_or("<anonymous>").to_owned(),
            family: family.label().to_owned(),
            samples: grid.len(),
        });
    }
    residuals.sort_by(f64::total_cmp);
    Ok(TriangleResiduals {
        sides: sides_f64(sides),
        max_residual: *residuals.last().expect("nonempty"),
        p99_residual: p99(&residuals),
        ok_samples: residuals.len(),
        flagged_samples: flagged,
    })
}

/// Checks that the trace of `psi` along `family` coincides with the
/// frame-mapped trisectrix shape on every given triangle. The verdict
/// compares the 99th-percentile relative residual per triangle against
/// `tol`, so isolated near-pole samples do not drown the statistic;
/// flagged samples are excluded. At least two triangles are required —
/// a single triangle cannot distinguish shape-level invariance from a
/// coincidence of one configuration.
pub fn verify_semi_invariance<R: Real>(
    psi: &CenterFunction<R>,
    family: &TriangleFamily<R>,
    triangles: &[SideLengths<R>],
    grid: &[f64],
    tol: f64,
) -> Result<SemiInvarianceReport, CurvesError> {
    if triangles.len() < 2 {
        return Err(CurvesError::NotEnoughTriangles {
            required: 2,
            got: triangles.len(),
        });
    }
    if grid.is_empty() {
        return Err(CurvesError::EmptyGrid);
    }
    let (shape, decomposition) = shape_for_family(family)?;
    let mut per_triangle = Vec::with_capacity(triangles.len());
    for sides in triangles {
        per_triangle.push(residuals_on_triangle(
            psi,
            family,
            &shape,
            decomposition.as_ref(),
            sides,
            grid,
        )?);
    }
    let semi_invariant = per_triangle.iter().all(|r| r.p99_residual <= tol);
    Ok(SemiInvarianceReport {
        per_triangle,
        tol,
        semi_invariant,
    })
}

/// One triangle's frame-condition residuals: orthogonality of the two
/// frame vectors and the 3 : 1 ratio of their squared norms.
#[derive(Clone, Debug)]
pub struct FrameConditionCheck {
    pub sides: [f64; 3],
    pub orthogonality_residual: f64,
    pub ratio_residual: f64,
    pub pass: bool,
    /// Both frame vectors vanish (the center sits at the centroid), so
    /// the conditions hold vacuously.
    pub trivial: bool,
}

/// Evaluates the two shear-frame conditions of `psi` on each triangle.
pub fn frame_condition_checks<R: Real>(
    psi: &CenterFunction<R>,
    triangles: &[SideLengths<R>],
    tol: f64,
) -> Result<Vec<FrameConditionCheck>, CurvesError> {
    let mut checks = Vec::with_capacity(triangles.len());
    for sides in triangles {
        let reference = canonical_placement(sides)?;
        let frame = raw_shear_frame(psi, &reference)?;
        let trivial_floor = R::from_f64(TRIVIAL_FRAME_REL) * &sides.longest();
        if !(frame.scale() > trivial_floor) {
            checks.push(FrameConditionCheck {
                sides: sides_f64(sides),
                orthogonality_residual: 0.0,
                ratio_residual: 0.0,
                pass: true,
                trivial: true,
            });
            continue;
        }
        let orthogonality = frame.orthogonality_residual().to_f64();
        let ratio = frame.ratio_residual().to_f64();
        checks.push(FrameConditionCheck {
            sides: sides_f64(sides),
            orthogonality_residual: orthogonality,
            ratio_residual: ratio,
            pass: orthogonality <= tol && ratio <= tol,
            trivial: false,
        });
    }
    Ok(checks)
}

/// Full invariance: the frame conditions on every triangle plus
/// semi-invariance along the aliquot family.
#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub conditions: Vec<FrameConditionCheck>,
    pub semi: SemiInvarianceReport,
    pub invariant: bool,
}

/// A center is invariant when its frame is an exact shear frame on
/// every triangle (conditions hold) and its aliquot trace is the
/// frame-mapped Maclaurin trisectrix (semi-invariance holds).
pub fn verify_invariance<R: Real>(
    psi: &CenterFunction<R>,
    triangles: &[SideLengths<R>],
    grid: &[f64],
    frame_tol: f64,
    semi_tol: f64,
) -> Result<InvarianceReport, CurvesError> {
    let conditions = frame_condition_checks(psi, triangles, frame_tol)?;
    let semi = verify_semi_invariance(
        psi,
        &TriangleFamily::<R>::aliquot(),
        triangles,
        grid,
        semi_tol,
    )?;
    let invariant = conditions.iter().all(|c| c.pass) && semi.semi_invariant;
    Ok(InvarianceReport {
        conditions,
        semi,
        invariant,
    })
}

/// One pointwise local property of a traced center.
#[derive(Clone, Debug)]
pub struct LocalPropertyCheck {
    pub name: &'static str,
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

fn check(name: &'static str, residual: f64, tol: f64) -> LocalPropertyCheck {
    LocalPropertyCheck {
        name,
        residual,
        tol,
        pass: residual <= tol,
    }
}

/// The four pointwise properties every traceable center satisfies:
///
/// 1. the aliquot trace starts and ends at the center itself;
/// 2. at parameter one half it reaches the reflection-through-the-
///    medial-triangle point `(3·X2 − X_ψ)/2`;
/// 3. parameters `t` and `1 − t` give point reflections through the
///    centroid (checked at one third vs two thirds);
/// 4. the nedian trace passes through the centroid at the collapse
///    parameter one half.
pub fn local_property_suite<R: Real>(
    psi: &CenterFunction<R>,
    sides: &SideLengths<R>,
) -> Result<Vec<LocalPropertyCheck>, CurvesError> {
    let reference: Triangle<R> = canonical_placement(sides)?;
    let x_psi = center_point(psi, sides, &reference)?;
    let g = reference.centroid();
    let aliquot = TriangleFamily::<R>::aliquot();
    let nedian = TriangleFamily::<R>::nedian();
    let tol = LOCAL_PROPERTY_TOL * sides.longest().to_f64();

    let at = |t: &R| center_at(&reference, psi, &aliquot, t);
    let third = R::one() / &R::from_f64(3.0);
    let two_thirds = R::one() - &third;
    let half = R::from_f64(0.5);

    let endpoint0 = at(&R::zero())?.dist(&x_psi).to_f64();
    let endpoint1 = at(&R::one())?.dist(&x_psi).to_f64();

    let three = R::from_f64(3.0);
    let medial = Point2::new(
        (three.clone() * &g.x - &x_psi.x) * &half,
        (three * &g.y - &x_psi.y) * &half,
    );
    let half_residual = at(&half)?.dist(&medial).to_f64();

    let two = R::from_f64(2.0);
    let mirrored = {
        let p = at(&third)?;
        Point2::new(two.clone() * &g.x - &p.x, two * &g.y - &p.y)
    };
    let reflection_residual = at(&two_thirds)?.dist(&mirrored).to_f64();

    let collapse_residual = center_at(&reference, psi, &nedian, &half)?
        .dist(&g)
        .to_f64();

    Ok(vec![
        check("aliquot-endpoints", endpoint0.max(endpoint1), tol),
        check("aliquot-half-medial", half_residual, tol),
        check("aliquot-point-reflection", reflection_residual, tol),
        check("nedian-collapse-centroid", collapse_residual, tol),
    ])
}
