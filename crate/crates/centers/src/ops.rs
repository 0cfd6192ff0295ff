//! Operations on center functions: evaluation to coordinates, trace and
//! normalization, isogonal conjugation, and affine combinations.

use std::sync::Arc;

use geom_core::{
    bary_to_point, tol, trilinear_to_bary, Point2, Real, SideLengths, Triangle, Trilinear,
};

use crate::error::CentersError;
use crate::function::{CenterFunction, CyclicFactor, Traceability};
use crate::reports::{traceability_report, TraceabilityVerdict};

/// Homogeneous trilinear coordinates of the center of `ψ`:
/// `[ψ(a,b,c) : ψ(b,c,a) : ψ(c,a,b)]`.
///
/// Fails when an evaluation is non-finite (a pole of the function) or
/// when all three evaluations vanish (no projective point defined).
pub fn center_trilinears<R: Real>(
    psi: &CenterFunction<R>,
    s: &SideLengths<R>,
) -> Result<Trilinear<R>, CentersError> {
    let [x1, x2, x3] = psi.cyclic_triple(s);
    let diag = || (s.a().to_f64(), s.b().to_f64(), s.c().to_f64());
    if !(x1.is_finite() && x2.is_finite() && x3.is_finite()) {
        let (a, b, c) = diag();
        return Err(CentersError::Pole { a, b, c });
    }
    let max = x1.abs().max_of(&x2.abs()).max_of(&x3.abs());
    if !(max > R::zero()) {
        let (a, b, c) = diag();
        return Err(CentersError::DegenerateCenter { a, b, c });
    }
    Ok(Trilinear::new(x1, x2, x3))
}

/// Cartesian position of the center of `ψ` on a placed triangle whose
/// side lengths are `s`.
pub fn center_point<R: Real>(
    psi: &CenterFunction<R>,
    s: &SideLengths<R>,
    t: &Triangle<R>,
) -> Result<Point2<R>, CentersError> {
    let tri = center_trilinears(psi, s)?;
    let bary = trilinear_to_bary(s, &tri);
    Ok(bary_to_point(t, &bary)?)
}

/// The trace `Σψ = a·ψ(a,b,c) + b·ψ(b,c,a) + c·ψ(c,a,b)`.
///
/// The trace is cyclic and symmetric in all three arguments, homogeneous
/// of degree one more than `ψ`, and multiplicative over cyclic factors.
pub fn trace<R: Real>(psi: &CenterFunction<R>, s: &SideLengths<R>) -> R {
    let [x1, x2, x3] = psi.cyclic_triple(s);
    s.a().clone() * x1 + s.b().clone() * x2 + s.c().clone() * x3
}

fn trace_raw<R: Real>(eval: &crate::function::EvalFn<R>, a: &R, b: &R, c: &R) -> R {
    a.clone() * eval(a, b, c) + b.clone() * eval(b, c, a) + c.clone() * eval(c, a, b)
}

/// Ensures `ψ` may be divided by its trace: known-yes passes, known-no
/// fails, and unknown functions are subjected to a sampled semi-decision.
fn require_traceable<R: Real>(psi: &CenterFunction<R>) -> Result<(), CentersError> {
    match psi.traceable() {
        Traceability::KnownYes => Ok(()),
        Traceability::KnownNo => Err(CentersError::NotTraceable {
            label: psi.id().unwrap_or("<anonymous>").to_owned(),
        }),
        Traceability::Unknown => {
            let report = traceability_report(psi, 2000, 0);
            if report.verdict == TraceabilityVerdict::LikelyTraceable {
                Ok(())
            } else {
                Err(CentersError::NotTraceable {
                    label: psi.id().unwrap_or("<anonymous>").to_owned(),
                })
            }
        }
    }
}

/// Divides `ψ` by its trace, producing a function whose trace is
/// identically 1 and whose homogeneity degree is −1.
pub fn normalize<R: Real>(psi: &CenterFunction<R>) -> Result<CenterFunction<R>, CentersError> {
    require_traceable(psi)?;
    let eval = psi.eval_fn();
    let normalized = move |a: &R, b: &R, c: &R| {
        let value = eval(a, b, c);
        value / trace_raw(&eval, a, b, c)
    };
    Ok(CenterFunction::new(
        None,
        None,
        Some(-1),
        Traceability::KnownYes,
        Arc::new(normalized),
    ))
}

/// The isogonal conjugate `1/ψ`: degree negated, traceability unknown.
///
/// Evaluations at zeros of `ψ` produce non-finite values, which the
/// coordinate operations report as poles.
pub fn isogonal_conjugate<R: Real>(psi: &CenterFunction<R>) -> CenterFunction<R> {
    let eval = psi.eval_fn();
    let conj = move |a: &R, b: &R, c: &R| eval(a, b, c).recip();
    CenterFunction::new(
        None,
        None,
        psi.degree().map(|d| -d),
        Traceability::Unknown,
        Arc::new(conj),
    )
}

/// The cyclic-affine combination `ω0·ψ0 + ω1·ψ1`.
///
/// The coefficients are cyclic functions of the sides, so the result is
/// again a center function; its trace is `ω0·Σψ0 + ω1·Σψ1`. Degrees must
/// agree when known: `deg(ω0) + deg(ψ0) = deg(ω1) + deg(ψ1)`.
pub fn cyclic_affine<R: Real>(
    psi0: &CenterFunction<R>,
    psi1: &CenterFunction<R>,
    omega0: &CyclicFactor<R>,
    omega1: &CyclicFactor<R>,
) -> Result<CenterFunction<R>, CentersError> {
    let degree = match (
        psi0.degree(),
        psi1.degree(),
        omega0.degree(),
        omega1.degree(),
    ) {
        (Some(d0), Some(d1), Some(w0), Some(w1)) => {
            if d0 + w0 != d1 + w1 {
                return Err(CentersError::DegreeMismatch {
                    left: d0 + w0,
                    right: d1 + w1,
                });
            }
            Some(d0 + w0)
        }
        _ => None,
    };
    let (e0, e1) = (psi0.eval_fn(), psi1.eval_fn());
    let (w0, w1) = (omega0.eval_fn(), omega1.eval_fn());
    let combined =
        move |a: &R, b: &R, c: &R| w0(a, b, c) * e0(a, b, c) + w1(a, b, c) * e1(a, b, c);
    Ok(CenterFunction::new(
        None,
        None,
        degree,
        Traceability::Unknown,
        Arc::new(combined),
    ))
}

/// The constant-affine combination `λ0·ψ0 + λ1·ψ1` with nonzero constant
/// coefficients and equal degrees.
pub fn constant_affine<R: Real>(
    psi0: &CenterFunction<R>,
    psi1: &CenterFunction<R>,
    lambda0: R,
    lambda1: R,
) -> Result<CenterFunction<R>, CentersError> {
    if lambda0 == R::zero() || lambda1 == R::zero() {
        return Err(CentersError::ZeroCoefficient);
    }
    if let (Some(d0), Some(d1)) = (psi0.degree(), psi1.degree()) {
        if d0 != d1 {
            return Err(CentersError::DegreeMismatch {
                left: d0,
                right: d1,
            });
        }
    }
    cyclic_affine(
        psi0,
        psi1,
        &CyclicFactor::constant(lambda0),
        &CyclicFactor::constant(lambda1),
    )
}

/// The scaled center `ψ_σ = (1−σ)·ψ/Σψ + σ·(1/a)/3`.
///
/// Geometrically this pulls the center of `ψ` toward the centroid:
/// `σ = 0` leaves it unchanged and `σ = 1` lands exactly on the
/// centroid. The result is normalized (trace identically 1).
pub fn scaled_center<R: Real>(
    psi: &CenterFunction<R>,
    sigma: R,
) -> Result<CenterFunction<R>, CentersError> {
    require_traceable(psi)?;
    let eval = psi.eval_fn();
    let one_minus = R::one() - &sigma;
    let third_sigma = sigma / R::from_f64(3.0);
    let scaled = move |a: &R, b: &R, c: &R| {
        let normalized = eval(a, b, c) / trace_raw(&eval, a, b, c);
        one_minus.clone() * normalized + third_sigma.clone() / a
    };
    Ok(CenterFunction::new(
        None,
        None,
        Some(-1),
        Traceability::KnownYes,
        Arc::new(scaled),
    ))
}

/// Recovers the cyclic coefficient values `(ω0, ω1)` with
/// `ψ2 = ω0·ψ0 + ω1·ψ1` at the three cyclic evaluations of `s`, by
/// solving the 2×2 system formed by the first two cyclic slots:
///
/// ```text
/// ω0 = (ψ2(a,b,c)·ψ1(b,c,a) − ψ2(b,c,a)·ψ1(a,b,c)) / D
/// ω1 = (ψ0(a,b,c)·ψ2(b,c,a) − ψ0(b,c,a)·ψ2(a,b,c)) / D
/// D  =  ψ0(a,b,c)·ψ1(b,c,a) − ψ0(b,c,a)·ψ1(a,b,c)
/// ```
///
/// Fails when `D` is negligible relative to the operand scale, which
/// happens at equilateral shapes and whenever the parents' centers
/// coincide at `s`.
pub fn cyclic_coefficients_of_collinear<R: Real>(
    psi0: &CenterFunction<R>,
    psi1: &CenterFunction<R>,
    psi2: &CenterFunction<R>,
    s: &SideLengths<R>,
) -> Result<(R, R), CentersError> {
    let [p0, q0, _] = psi0.cyclic_triple(s);
    let [p1, q1, _] = psi1.cyclic_triple(s);
    let [p2, q2, _] = psi2.cyclic_triple(s);
    let denom = p0.clone() * &q1 - q0.clone() * &p1;
    let scale = (p0.abs().max_of(&q0.abs())) * (p1.abs().max_of(&q1.abs()));
    let eps = R::from_f64(tol::EPS_PROJ_FACTOR) * scale;
    if denom.abs() <= eps {
        return Err(CentersError::RankDeficient {
            denominator: denom.to_f64(),
        });
    }
    let omega0 = (p2.clone() * &q1 - q2.clone() * &p1) / &denom;
    let omega1 = (p0 * q2 - q0 * p2) / denom;
    Ok((omega0, omega1))
}
