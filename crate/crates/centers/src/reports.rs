//! Sampled semi-decision reports: traceability, essential difference,
//! and the homogeneity/bi-symmetry invariants of center functions.
//!
//! The underlying questions (does a trace vanish anywhere? do two centers
//! coincide outside equilateral shapes?) concern a continuum, so a
//! numeric engine can only sample and refine. Each report documents its
//! sample count and refines around the most suspicious shapes before
//! giving a verdict; verdicts are labelled "likely" where a finite sample
//! cannot be conclusive.

use geom_core::{proportionality_residual3, Real, SideLengths};
use rand::Rng;

use crate::function::CenterFunction;
use crate::sampling::{is_valid_shape, sample_shape, shape_rng};

/// Number of refinement rounds around a suspicious shape. The box shrinks
/// geometrically, so the final resolution is
/// `REFINE_RADIUS · REFINE_SHRINK^(REFINE_ROUNDS−1) ≈ 6e−13`, deep enough
/// to certify coincidences whose residual decays only linearly with
/// distance.
const REFINE_ROUNDS: usize = 18;

/// Samples drawn per refinement round.
const REFINE_SAMPLES: usize = 64;

/// Initial half-width of the refinement box.
const REFINE_RADIUS: f64 = 0.1;

/// Shrink factor of the refinement box per round.
const REFINE_SHRINK: f64 = 0.25;

/// Relative threshold below which a refined trace minimum counts as a
/// vanishing trace.
const TRACE_VANISH_REL: f64 = 1e-6;

/// Residual below which two normalized trilinear triples count as the
/// same projective point.
const COINCIDENCE_TOL: f64 = 1e-9;

/// Distance from `(b, c) = (1, 1)` within which a coincidence is
/// attributed to the equilateral collapse rather than to the functions.
const EQUILATERAL_RADIUS: f64 = 1e-2;

/// Verdict of a [`traceability_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceabilityVerdict {
    /// No vanishing trace found; the function is traceable as far as the
    /// sample can tell.
    LikelyTraceable,
    /// The trace vanishes (or dives below the vanishing threshold) at the
    /// reported shape.
    NotTraceable,
}

/// Result of sampling the trace over shape space.
#[derive(Clone, Debug)]
pub struct TraceabilityReport {
    pub verdict: TraceabilityVerdict,
    pub samples: usize,
    /// Smallest `|Σψ|` seen in the coarse pass.
    pub min_abs_trace: f64,
    /// Smallest `|Σψ|` after refinement around the coarse minimum.
    pub refined_min_abs: f64,
    /// Median `|Σψ|` over the coarse pass, used as the scale reference.
    /// The median (rather than the maximum) keeps the vanishing threshold
    /// meaningful for functions whose trace blows up near pole curves.
    pub trace_scale: f64,
    /// Shape `(b, c)` (with `a = 1`) attaining the refined minimum.
    pub argmin_shape: (f64, f64),
    /// Whether both signs of the trace were observed. On its own this is
    /// only a diagnostic: a sign flip across a pole does not imply a
    /// zero.
    pub sign_change: bool,
}

/// Samples `|Σψ|` over the shape region and refines around the smallest
/// value found.
///
/// This is a semi-decision: a "not traceable" verdict exhibits a witness
/// shape where the trace (numerically) vanishes, while "likely traceable"
/// only states that `n_samples` draws plus refinement found no vanishing
/// point.
pub fn traceability_report<R: Real>(
    psi: &CenterFunction<R>,
    n_samples: usize,
    seed: u64,
) -> TraceabilityReport {
    let mut rng = shape_rng(seed);
    let n = n_samples.max(1);

    let mut min_abs = f64::INFINITY;
    let mut magnitudes: Vec<f64> = Vec::with_capacity(n);
    let mut argmin = (1.0, 1.0);
    let (mut seen_pos, mut seen_neg) = (false, false);

    let trace_at = |b: f64, c: f64| -> Option<f64> {
        let s = SideLengths::new(R::one(), R::from_f64(b), R::from_f64(c)).ok()?;
        let value = crate::ops::trace(psi, &s);
        value.is_finite().then(|| value.to_f64())
    };

    for _ in 0..n {
        let (b, c) = sample_shape(&mut rng);
        let Some(tr) = trace_at(b, c) else { continue };
        if tr > 0.0 {
            seen_pos = true;
        }
        if tr < 0.0 {
            seen_neg = true;
        }
        let mag = tr.abs();
        if mag < min_abs {
            min_abs = mag;
            argmin = (b, c);
        }
        magnitudes.push(mag);
    }

    // Median magnitude as scale: robust against samples that land next to
    // a pole curve of the evaluator, where the trace is arbitrarily large.
    magnitudes.sort_by(f64::total_cmp);
    let median_abs = magnitudes.get(magnitudes.len() / 2).copied().unwrap_or(0.0);

    // Shrinking-box refinement around the coarse minimum.
    let mut refined_min = min_abs;
    let mut center = argmin;
    let mut radius = REFINE_RADIUS;
    for _ in 0..REFINE_ROUNDS {
        for _ in 0..REFINE_SAMPLES {
            let b = center.0 + rng.random_range(-radius..radius);
            let c = center.1 + rng.random_range(-radius..radius);
            if !is_valid_shape(b, c) {
                continue;
            }
            let Some(tr) = trace_at(b, c) else { continue };
            let mag = tr.abs();
            if mag < refined_min {
                refined_min = mag;
                center = (b, c);
            }
        }
        radius *= REFINE_SHRINK;
    }

    let scale = median_abs.max(f64::MIN_POSITIVE);
    let verdict = if refined_min < TRACE_VANISH_REL * scale {
        TraceabilityVerdict::NotTraceable
    } else {
        TraceabilityVerdict::LikelyTraceable
    };

    TraceabilityReport {
        verdict,
        samples: n,
        min_abs_trace: min_abs,
        refined_min_abs: refined_min,
        trace_scale: median_abs,
        argmin_shape: center,
        sign_change: seen_pos && seen_neg,
    }
}

/// Verdict of an [`essential_difference_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EssentialDifferenceVerdict {
    /// No coincidence found away from equilateral shapes.
    LikelyEssentiallyDifferent,
    /// The two centers coincide at the reported non-equilateral shape.
    NotEssentiallyDifferent,
}

/// Result of sampling the projective distance between two centers.
#[derive(Clone, Debug)]
pub struct EssentialDifferenceReport {
    pub verdict: EssentialDifferenceVerdict,
    pub samples: usize,
    /// Smallest normalized-trilinear residual found away from the
    /// equilateral shape, after refinement.
    pub min_residual: f64,
    /// Shape `(b, c)` attaining that minimum.
    pub argmin_shape: (f64, f64),
    /// A non-equilateral coincidence shape, present exactly for the
    /// `NotEssentiallyDifferent` verdict.
    pub witness: Option<(f64, f64)>,
}

/// Samples shape space for non-equilateral shapes where the two centers
/// coincide as projective points.
///
/// Every pair of (traceable) centers coincides at equilateral shapes, so
/// minima that converge into a small ball around `(b, c) = (1, 1)` are
/// attributed to that collapse and ignored. Shapes where either function
/// has a pole are skipped. Like all sampled verdicts, "likely essentially
/// different" is a semi-decision.
pub fn essential_difference_report<R: Real>(
    psi0: &CenterFunction<R>,
    psi1: &CenterFunction<R>,
    n_samples: usize,
    seed: u64,
) -> EssentialDifferenceReport {
    let mut rng = shape_rng(seed);
    let n = n_samples.max(1);

    let residual_at = |b: f64, c: f64| -> Option<f64> {
        let s = SideLengths::new(R::one(), R::from_f64(b), R::from_f64(c)).ok()?;
        let t0 = psi0.cyclic_triple(&s);
        let t1 = psi1.cyclic_triple(&s);
        let finite =
            t0.iter().all(|v| v.is_finite()) && t1.iter().all(|v| v.is_finite());
        if !finite {
            return None;
        }
        let zero0 = t0.iter().all(|v| *v == R::zero());
        let zero1 = t1.iter().all(|v| *v == R::zero());
        if zero0 || zero1 {
            return None;
        }
        let r = proportionality_residual3(&t0, &t1);
        r.is_finite().then(|| r.to_f64())
    };

    let far_from_equilateral =
        |b: f64, c: f64| ((b - 1.0).powi(2) + (c - 1.0).powi(2)).sqrt() > EQUILATERAL_RADIUS;

    // Coarse pass: keep the best few well-separated candidate minima
    // outside the equilateral ball.
    const CANDIDATES: usize = 3;
    const SEPARATION: f64 = 0.1;
    let mut best: Vec<(f64, (f64, f64))> = Vec::new();
    for _ in 0..n {
        let (b, c) = sample_shape(&mut rng);
        if !far_from_equilateral(b, c) {
            continue;
        }
        let Some(r) = residual_at(b, c) else { continue };
        let near =
            |p: (f64, f64)| ((p.0 - b).powi(2) + (p.1 - c).powi(2)).sqrt() < SEPARATION;
        if let Some(slot) = best.iter_mut().find(|(_, p)| near(*p)) {
            if r < slot.0 {
                *slot = (r, (b, c));
            }
        } else {
            best.push((r, (b, c)));
            best.sort_by(|x, y| x.0.total_cmp(&y.0));
            best.truncate(CANDIDATES);
        }
    }

    // Refine each candidate; a minimum that wanders into the equilateral
    // ball is discarded as an equilateral artifact.
    let mut global_min = f64::INFINITY;
    let mut global_argmin = (1.0, 1.0);
    let mut witness: Option<(f64, f64)> = None;
    for &(coarse, start) in &best {
        let mut local_min = coarse;
        let mut center = start;
        let mut radius = REFINE_RADIUS;
        for _ in 0..REFINE_ROUNDS {
            for _ in 0..REFINE_SAMPLES {
                let b = center.0 + rng.random_range(-radius..radius);
                let c = center.1 + rng.random_range(-radius..radius);
                if !is_valid_shape(b, c) {
                    continue;
                }
                let Some(r) = residual_at(b, c) else { continue };
                if r < local_min {
                    local_min = r;
                    center = (b, c);
                }
            }
            radius *= REFINE_SHRINK;
        }
        if !far_from_equilateral(center.0, center.1) {
            continue;
        }
        if local_min < global_min {
            global_min = local_min;
            global_argmin = center;
        }
        if local_min < COINCIDENCE_TOL && witness.is_none() {
            witness = Some(center);
        }
    }

    let verdict = if witness.is_some() {
        EssentialDifferenceVerdict::NotEssentiallyDifferent
    } else {
        EssentialDifferenceVerdict::LikelyEssentiallyDifferent
    };

    EssentialDifferenceReport {
        verdict,
        samples: n,
        min_residual: global_min,
        argmin_shape: global_argmin,
        witness,
    }
}

/// Result of sampling the defining invariants of a center function.
#[derive(Clone, Debug)]
pub struct InvariantsReport {
    pub samples: usize,
    /// Largest relative violation of `ψ(a,b,c) = ψ(a,c,b)`.
    pub max_bisymmetry_residual: f64,
    /// Largest relative violation of `ψ(t·a, t·b, t·c) = t^r·ψ(a,b,c)`
    /// over the scale factors `{½, 2, 7}`; `None` when the degree is
    /// unknown.
    pub max_homogeneity_residual: Option<f64>,
    /// Whether all residuals are below the given tolerance.
    pub pass: bool,
}

/// Samples bi-symmetry and homogeneity of an opaque evaluator.
pub fn validate_center_invariants<R: Real>(
    psi: &CenterFunction<R>,
    n_samples: usize,
    seed: u64,
    tolerance: f64,
) -> InvariantsReport {
    let mut rng = shape_rng(seed);
    let n = n_samples.max(1);
    let scales = [0.5, 2.0, 7.0];

    let mut max_bisym: f64 = 0.0;
    let mut max_homog: Option<f64> = psi.degree().map(|_| 0.0);

    for _ in 0..n {
        let (b, c) = sample_shape(&mut rng);
        let (ra, rb, rc) = (R::one(), R::from_f64(b), R::from_f64(c));
        let value = psi.eval(&ra, &rb, &rc);
        if !value.is_finite() {
            continue;
        }
        let swapped = psi.eval(&ra, &rc, &rb);
        let scale = value.abs().max_of(&swapped.abs()).max_of(&R::one());
        let bisym = ((value.clone() - swapped) / scale).abs().to_f64();
        max_bisym = max_bisym.max(bisym);

        if let (Some(degree), Some(worst)) = (psi.degree(), max_homog.as_mut()) {
            for t in scales {
                let rt = R::from_f64(t);
                let scaled = psi.eval(
                    &(rt.clone() * &ra),
                    &(rt.clone() * &rb),
                    &(rt.clone() * &rc),
                );
                let predicted = rt.powi(degree) * value.clone();
                if !(scaled.is_finite() && predicted.is_finite()) {
                    continue;
                }
                let scale = scaled.abs().max_of(&predicted.abs()).max_of(&R::one());
                let res = ((scaled - predicted) / scale).abs().to_f64();
                *worst = worst.max(res);
            }
        }
    }

    let pass = max_bisym <= tolerance && max_homog.map_or(true, |h| h <= tolerance);
    InvariantsReport {
        samples: n,
        max_bisymmetry_residual: max_bisym,
        max_homogeneity_residual: max_homog,
        pass,
    }
}
