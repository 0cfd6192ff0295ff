//! Operations on triangle families: placing family triangles,
//! concatenation and inversion (the Abelian group structure), the delta
//! functional, and decomposition into a scaling part and an aliquot
//! part.

use geom_core::{bary_to_point, tol, Barycentric, Point2, Real, SideLengths, Triangle};

use crate::error::FamiliesError;
use crate::family::{normalized_spread, TriangleFamily, POLE_EXCLUSION_RADIUS};

/// Relative size below which a grid value counts as a candidate zero
/// worth refining.
const SCAN_CANDIDATE_REL: f64 = 1e-3;

/// Relative size below which a refined value counts as an actual zero.
const SCAN_ZERO_REL: f64 = 1e-9;

/// Normalized spread above which a delta zero witnesses
/// non-decomposability rather than a benign centroid collapse.
const SPREAD_TOL: f64 = 1e-6;

/// Grid size used when scanning for weight-sum zeros of derived
/// families.
const POLE_SCAN_SAMPLES: usize = 2001;

/// The vertices of one family triangle, with a degeneracy flag instead
/// of an error: collinear (or fully collapsed) triangles occur at
/// isolated parameters of perfectly good families, and their centroid
/// is still well defined.
#[derive(Clone, Debug)]
pub struct FamilyTriangle<R> {
    /// Vertices `A_t`, `B_t`, `C_t`.
    pub vertices: [Point2<R>; 3],
    /// True when the vertices are (numerically) collinear.
    pub degenerate: bool,
    /// The parameter this triangle was built at, kept for diagnostics.
    pub t: f64,
}

impl<R: Real> FamilyTriangle<R> {
    /// The centroid, defined regardless of degeneracy.
    pub fn centroid(&self) -> Point2<R> {
        let three = R::from_f64(3.0);
        let [a, b, c] = &self.vertices;
        Point2::new(
            (a.x.clone() + &b.x + &c.x) / &three,
            (a.y.clone() + &b.y + &c.y) / &three,
        )
    }

    /// Side lengths `(|B_t C_t|, |C_t A_t|, |A_t B_t|)`; fails for
    /// degenerate triangles.
    pub fn side_lengths(&self) -> Result<SideLengths<R>, FamiliesError> {
        if self.degenerate {
            return Err(FamiliesError::DegenerateFamilyTriangle { t: self.t });
        }
        let [a, b, c] = &self.vertices;
        Ok(SideLengths::new(b.dist(c), c.dist(a), a.dist(b))?)
    }

    /// An oriented triangle; fails for degenerate vertices.
    pub fn triangle(&self) -> Result<Triangle<R>, FamiliesError> {
        if self.degenerate {
            return Err(FamiliesError::DegenerateFamilyTriangle { t: self.t });
        }
        let [a, b, c] = &self.vertices;
        Ok(Triangle::new(a.clone(), b.clone(), c.clone())?)
    }
}

/// Places the family triangle of `family` at parameter `t` relative to
/// the reference triangle: the vertices are the cyclic barycentric rows
/// `[Ψ1:Ψ2:Ψ3]`, `[Ψ3:Ψ1:Ψ2]`, `[Ψ2:Ψ3:Ψ1]`.
pub fn family_triangle<R: Real>(
    reference: &Triangle<R>,
    family: &TriangleFamily<R>,
    t: &R,
) -> Result<FamilyTriangle<R>, FamiliesError> {
    let t_f64 = t.to_f64();
    let [p1, p2, p3] = family.eval(t);
    if !(p1.is_finite() && p2.is_finite() && p3.is_finite()) {
        return Err(FamiliesError::NonFiniteEvaluation { t: t_f64 });
    }
    let sum = p1.clone() + &p2 + &p3;
    let max_abs = p1.abs().max_of(&p2.abs()).max_of(&p3.abs());
    if sum.abs() <= R::from_f64(tol::EPS_PROJ_FACTOR) * max_abs {
        return Err(FamiliesError::ZeroWeightSum {
            t: t_f64,
            sum: sum.to_f64(),
        });
    }
    let row = |l1: &R, l2: &R, l3: &R| {
        bary_to_point(
            reference,
            &Barycentric::new(l1.clone(), l2.clone(), l3.clone()),
        )
    };
    let a = row(&p1, &p2, &p3)?;
    let b = row(&p3, &p1, &p2)?;
    let c = row(&p2, &p3, &p1)?;

    // Degeneracy: collinearity of the vertices at the scale of the
    // longest side, mirroring the oriented-triangle validity check.
    let ab = b.sub(&a);
    let ac = c.sub(&a);
    let bc = c.sub(&b);
    let det = ab.cross(&ac).abs();
    let longest_sq = ab
        .norm_sq()
        .max_of(&ac.norm_sq())
        .max_of(&bc.norm_sq());
    let degenerate = det <= R::from_f64(tol::EPS_DEGENERATE_FACTOR) * longest_sq;

    Ok(FamilyTriangle {
        vertices: [a, b, c],
        degenerate,
        t: t_f64,
    })
}

/// The concatenation of two generating triples:
///
/// ```text
/// (Ψ1Ψ̃1 + Ψ2Ψ̃3 + Ψ3Ψ̃2,  Ψ1Ψ̃2 + Ψ2Ψ̃1 + Ψ3Ψ̃3,  Ψ1Ψ̃3 + Ψ2Ψ̃2 + Ψ3Ψ̃1)
/// ```
///
/// Geometrically: the family triangle of the concatenation is the first
/// family's triangle built on the second family's triangle.
pub fn concat_triples<R: Real>(x: &[R; 3], y: &[R; 3]) -> [R; 3] {
    [
        x[0].clone() * &y[0] + x[1].clone() * &y[2] + x[2].clone() * &y[1],
        x[0].clone() * &y[1] + x[1].clone() * &y[0] + x[2].clone() * &y[2],
        x[0].clone() * &y[2] + x[1].clone() * &y[1] + x[2].clone() * &y[0],
    ]
}

/// Intersection of two domains, falling back to the first when they do
/// not overlap.
fn intersect_domains(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let lo = a.0.max(b.0);
    let hi = a.1.min(b.1);
    if lo < hi {
        (lo, hi)
    } else {
        a
    }
}

fn merged_poles(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut poles: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
    poles.sort_by(f64::total_cmp);
    poles.dedup_by(|x, y| (*x - *y).abs() <= POLE_EXCLUSION_RADIUS);
    poles
}

/// The concatenation of two families. Polynomial representations are
/// combined exactly by coefficient convolution; otherwise the result is
/// closure-backed. The weight sum of the result is the product of the
/// parents' weight sums, so the poles are inherited.
pub fn concat<R: Real>(f: &TriangleFamily<R>, g: &TriangleFamily<R>) -> TriangleFamily<R> {
    let label = format!("({}∘{})", f.label(), g.label());
    let domain = intersect_domains(f.domain(), g.domain());
    let poles = merged_poles(f.poles(), g.poles());
    let family = match (f.polynomials(), g.polynomials()) {
        (Some(p), Some(q)) => {
            let c1 = p[0].mul(&q[0]).add(&p[1].mul(&q[2])).add(&p[2].mul(&q[1]));
            let c2 = p[0].mul(&q[1]).add(&p[1].mul(&q[0])).add(&p[2].mul(&q[2]));
            let c3 = p[0].mul(&q[2]).add(&p[1].mul(&q[1])).add(&p[2].mul(&q[0]));
            TriangleFamily::polynomial_unchecked(label, [c1, c2, c3])
        }
        _ => {
            let (fc, gc) = (f.clone(), g.clone());
            TriangleFamily::closure_unchecked(label, move |t: &R| {
                concat_triples(&fc.eval(t), &gc.eval(t))
            })
        }
    };
    family.with_domain(domain).with_poles(poles)
}

/// The inverse family `(Ψ1²−Ψ2Ψ3, Ψ3²−Ψ1Ψ2, Ψ2²−Ψ3Ψ1)`:
/// concatenating with it yields a triple proportional to the identity.
///
/// Its weight sum is `½[(Ψ1−Ψ2)² + (Ψ2−Ψ3)² + (Ψ3−Ψ1)²]`, which
/// vanishes exactly where the original family collapses to the
/// centroid; those parameters are found by scanning and declared as
/// poles of the inverse.
pub fn inverse<R: Real>(f: &TriangleFamily<R>) -> TriangleFamily<R> {
    let label = format!("inv({})", f.label());
    let family = match f.polynomials() {
        Some(p) => {
            let i1 = p[0].mul(&p[0]).sub(&p[1].mul(&p[2]));
            let i2 = p[2].mul(&p[2]).sub(&p[0].mul(&p[1]));
            let i3 = p[1].mul(&p[1]).sub(&p[2].mul(&p[0]));
            TriangleFamily::polynomial_unchecked(label, [i1, i2, i3])
        }
        None => {
            let fc = f.clone();
            TriangleFamily::closure_unchecked(label, move |t: &R| {
                let [p1, p2, p3] = fc.eval(t);
                [
                    p1.clone() * &p1 - p2.clone() * &p3,
                    p3.clone() * &p3 - p1.clone() * &p2,
                    p2.clone() * &p2 - p3.clone() * &p1,
                ]
            })
        }
    };
    // Collapse parameters of f are weight-sum zeros of the inverse.
    let spread_sq = |t: f64| {
        let [p1, p2, p3] = f.eval_f64(t);
        let (d1, d2, d3) = (
            (p1.clone() - &p2).to_f64(),
            (p2 - &p3).to_f64(),
            (p3 - &p1).to_f64(),
        );
        d1 * d1 + d2 * d2 + d3 * d3
    };
    let collapses = scan_zeros(&spread_sq, f.domain(), POLE_SCAN_SAMPLES);
    let poles = merged_poles(f.poles(), &collapses);
    family.with_domain(f.domain()).with_poles(poles)
}

/// The delta functional `δ(t) = 2Ψ1(t) − Ψ2(t) − Ψ3(t)` of a triple.
pub fn delta_triple<R: Real>(triple: &[R; 3]) -> R {
    R::from_f64(2.0) * triple[0].clone() - &triple[1] - &triple[2]
}

/// The delta functional of a family at `t`.
pub fn delta<R: Real>(family: &TriangleFamily<R>, t: &R) -> R {
    delta_triple(&family.eval(t))
}

/// Scans `f` for zeros over `domain` on an `n`-point grid, refining
/// sign changes by bisection and small local minima of `|f|` by ternary
/// search. Returns deduplicated zero locations.
fn scan_zeros(f: &dyn Fn(f64) -> f64, domain: (f64, f64), n: usize) -> Vec<f64> {
    let (lo, hi) = domain;
    let n = n.max(16);
    let step = (hi - lo) / ((n - 1) as f64);
    let ts: Vec<f64> = (0..n).map(|i| lo + step * i as f64).collect();
    let ys: Vec<f64> = ts.iter().map(|&t| f(t)).collect();
    let scale = ys
        .iter()
        .filter(|y| y.is_finite())
        .fold(0.0_f64, |acc, y| acc.max(y.abs()));
    if scale == 0.0 {
        return Vec::new(); // identically zero; the caller handles this case
    }

    let mut zeros: Vec<f64> = Vec::new();
    let mut push = |t: f64| {
        let tol_t = (hi - lo) * 1e-6;
        if !zeros.iter().any(|z| (z - t).abs() <= tol_t) {
            zeros.push(t);
        }
    };

    for i in 0..n - 1 {
        let (ya, yb) = (ys[i], ys[i + 1]);
        if !(ya.is_finite() && yb.is_finite()) {
            continue;
        }
        if ya == 0.0 {
            push(ts[i]);
            continue;
        }
        if ya * yb < 0.0 {
            // Bisection on the sign change.
            let (mut a, mut b) = (ts[i], ts[i + 1]);
            let mut fa = ya;
            for _ in 0..80 {
                let m = 0.5 * (a + b);
                let fm = f(m);
                if fm == 0.0 {
                    a = m;
                    b = m;
                    break;
                }
                if fa * fm < 0.0 {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            push(0.5 * (a + b));
        }
    }
    if ys[n - 1] == 0.0 {
        push(ts[n - 1]);
    }

    // Local minima of |f| that dip below the candidate threshold may be
    // zeros without a sign change (even-order roots).
    for i in 1..n - 1 {
        let mag = ys[i].abs();
        if mag <= ys[i - 1].abs() && mag <= ys[i + 1].abs() && mag < SCAN_CANDIDATE_REL * scale {
            let (mut a, mut b) = (ts[i - 1], ts[i + 1]);
            for _ in 0..160 {
                let m1 = a + (b - a) / 3.0;
                let m2 = b - (b - a) / 3.0;
                if f(m1).abs() <= f(m2).abs() {
                    b = m2;
                } else {
                    a = m1;
                }
            }
            let t_star = 0.5 * (a + b);
            if f(t_star).abs() <= SCAN_ZERO_REL * scale {
                push(t_star);
            }
        }
    }

    zeros.sort_by(f64::total_cmp);
    zeros
}

/// Verdict of a [`decomposability_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecomposabilityVerdict {
    /// Every found delta zero is a benign centroid collapse.
    LikelyDecomposable,
    /// Delta vanishes at a parameter where the triple has genuine
    /// spread, so no scaling∘aliquot form exists there.
    NotDecomposable,
}

/// A refined zero of delta together with the normalized spread of the
/// generating triple there.
#[derive(Clone, Copy, Debug)]
pub struct DeltaZero {
    pub t: f64,
    pub spread: f64,
}

/// Result of sampling delta over the family domain.
#[derive(Clone, Debug)]
pub struct DecomposabilityReport {
    pub verdict: DecomposabilityVerdict,
    pub samples: usize,
    /// Delta zeros where the triple keeps genuine spread: witnesses of
    /// non-decomposability.
    pub witnesses: Vec<DeltaZero>,
    /// Delta zeros where the triple collapses to all-equal components:
    /// the parameters where the scaling factor is 0 and the aliquot
    /// parameter is undefined.
    pub singular_ts: Vec<f64>,
    /// Smallest `|δ|` over the sample grid, for diagnostics.
    pub min_abs_delta: f64,
}

/// Samples `δ(t) = 2Ψ1 − Ψ2 − Ψ3` over the family domain, refines its
/// zeros, and classifies each by the spread of the generating triple:
/// a family is decomposable into scaling∘aliquot exactly when delta
/// only vanishes where the whole triple collapses. This is a
/// semi-decision: "likely decomposable" means the sampled grid plus
/// refinement found no counterexample.
pub fn decomposability_report<R: Real>(
    family: &TriangleFamily<R>,
    n_samples: usize,
) -> DecomposabilityReport {
    let n = n_samples.max(16);
    let delta_at = |t: f64| delta_triple(&family.eval_f64(t)).to_f64();
    let (lo, hi) = family.domain();
    let step = (hi - lo) / ((n - 1) as f64);

    let mut min_abs_delta = f64::INFINITY;
    let mut max_abs_delta: f64 = 0.0;
    let mut triple_scale: f64 = 0.0;
    let mut max_spread = (0.0_f64, lo);
    for i in 0..n {
        let t = lo + step * i as f64;
        if !family.valid_parameter(t) {
            continue;
        }
        let triple = family.eval_f64(t);
        let d = delta_triple(&triple).to_f64();
        min_abs_delta = min_abs_delta.min(d.abs());
        max_abs_delta = max_abs_delta.max(d.abs());
        for v in &triple {
            triple_scale = triple_scale.max(v.to_f64().abs());
        }
        let spread = normalized_spread(&triple);
        if spread > max_spread.0 {
            max_spread = (spread, t);
        }
    }

    let mut witnesses = Vec::new();
    let mut singular_ts = Vec::new();
    if max_abs_delta <= SCAN_ZERO_REL * triple_scale.max(f64::MIN_POSITIVE) {
        // Delta vanishes identically: the scaling part is stuck at 0,
        // so any parameter with genuine spread is a witness.
        if max_spread.0 > SPREAD_TOL {
            witnesses.push(DeltaZero {
                t: max_spread.1,
                spread: max_spread.0,
            });
        }
    } else {
        for t in scan_zeros(&delta_at, family.domain(), n) {
            let spread = normalized_spread(&family.eval_f64(t));
            if spread > SPREAD_TOL {
                witnesses.push(DeltaZero { t, spread });
            } else {
                singular_ts.push(t);
            }
        }
    }

    let verdict = if witnesses.is_empty() {
        DecomposabilityVerdict::LikelyDecomposable
    } else {
        DecomposabilityVerdict::NotDecomposable
    };
    DecomposabilityReport {
        verdict,
        samples: n,
        witnesses,
        singular_ts,
        min_abs_delta,
    }
}

/// The scaling∘aliquot decomposition of a family: evaluators for the
/// scaling factor `σ(t) = −δ/(Ψ1+Ψ2+Ψ3)` and the aliquot parameter
/// `τ(t) = (Ψ1−Ψ3)/δ`, plus the singular parameters where `δ = 0`
/// (there `σ = 0` and `τ` is undefined).
#[derive(Clone, Debug)]
pub struct FamilyDecomposition<R: Real> {
    family: TriangleFamily<R>,
    singular_ts: Vec<f64>,
}

impl<R: Real> FamilyDecomposition<R> {
    /// The scaling factor at `t`.
    pub fn sigma(&self, t: &R) -> R {
        let triple = self.family.eval(t);
        let sum = triple[0].clone() + &triple[1] + &triple[2];
        -delta_triple(&triple) / sum
    }

    /// The aliquot parameter at `t`; non-finite at singular parameters.
    pub fn tau(&self, t: &R) -> R {
        let triple = self.family.eval(t);
        (triple[0].clone() - &triple[2]) / delta_triple(&triple)
    }

    /// Parameters where delta vanishes and `tau` is undefined.
    pub fn singular_ts(&self) -> &[f64] {
        &self.singular_ts
    }

    /// True when `t` is within the pole-exclusion radius of a singular
    /// parameter.
    pub fn is_singular(&self, t: f64) -> bool {
        self.singular_ts
            .iter()
            .any(|s| (t - s).abs() <= POLE_EXCLUSION_RADIUS)
    }

    /// The triple `Φ_scaling(σ(t)) ∘ Φ_aliquot(τ(t))`, which must be
    /// proportional to the family's own triple away from singular
    /// parameters.
    pub fn reconstruct(&self, t: &R) -> [R; 3] {
        let scaling = TriangleFamily::<R>::scaling().eval(&self.sigma(t));
        let aliquot = TriangleFamily::<R>::aliquot().eval(&self.tau(t));
        concat_triples(&scaling, &aliquot)
    }
}

/// Decomposes a family into scaling∘aliquot form, failing with the
/// first witness parameter when the family is not decomposable.
pub fn decompose<R: Real>(
    family: &TriangleFamily<R>,
) -> Result<FamilyDecomposition<R>, FamiliesError> {
    let report = decomposability_report(family, 1000);
    if let Some(witness) = report.witnesses.first() {
        return Err(FamiliesError::NotDecomposable {
            t: witness.t,
            spread: witness.spread,
        });
    }
    Ok(FamilyDecomposition {
        family: family.clone(),
        singular_ts: report.singular_ts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::Polynomial;
    use geom_core::canonical_placement;

    fn reference() -> Triangle<f64> {
        canonical_placement(&SideLengths::new(3.0, 4.0, 5.0).unwrap()).unwrap()
    }

    #[test]
    fn delta_of_builtin_families() {
        let t = 0.7;
        assert_eq!(delta(&TriangleFamily::<f64>::identity(), &t), 2.0);
        assert!((delta(&TriangleFamily::<f64>::scaling(), &t) - 6.0 * t).abs() < 1e-15);
        assert_eq!(delta(&TriangleFamily::<f64>::aliquot(), &t), -1.0);
        let d = delta(&TriangleFamily::<f64>::nedian(), &0.3);
        assert!((d - -(0.4_f64 * 0.4)).abs() < 1e-15);
    }

    #[test]
    fn concat_is_commutative_associative_with_identity() {
        let f = TriangleFamily::<f64>::scaling();
        let g = TriangleFamily::<f64>::aliquot();
        let h = TriangleFamily::<f64>::nedian();
        let fg = concat(&f, &g);
        let gf = concat(&g, &f);
        assert_eq!(fg.polynomials(), gf.polynomials());
        let assoc_l = concat(&concat(&f, &g), &h);
        let assoc_r = concat(&f, &concat(&g, &h));
        assert_eq!(assoc_l.polynomials(), assoc_r.polynomials());
        let id = TriangleFamily::<f64>::identity();
        assert_eq!(concat(&id, &h).polynomials(), h.polynomials());
        assert_eq!(concat(&h, &id).polynomials(), h.polynomials());
    }

    #[test]
    fn concat_of_polynomial_families_matches_triple_products() {
        let f = TriangleFamily::<f64>::nedian();
        let g = TriangleFamily::<f64>::scaling();
        let fg = concat(&f, &g);
        for t in [-1.3, 0.0, 0.4, 2.2] {
            let direct = concat_triples(&f.eval(&t), &g.eval(&t));
            let composed = fg.eval(&t);
            for i in 0..3 {
                assert!((direct[i] - composed[i]).abs() < 1e-12 * (1.0 + direct[i].abs()));
            }
        }
    }

    #[test]
    fn inverse_concatenates_to_the_identity_triple() {
        let f = TriangleFamily::<f64>::scaling();
        let round = concat(&f, &inverse(&f));
        let ps = round.polynomials().expect("polynomial");
        // (Ψ1³+Ψ2³+Ψ3³−3Ψ1Ψ2Ψ3, 0, 0); for scaling the sum is 27t².
        assert_eq!(ps[0], Polynomial::from_f64(&[0.0, 0.0, 27.0]));
        assert!(ps[1].is_zero());
        assert!(ps[2].is_zero());
    }

    #[test]
    fn inverse_declares_collapse_parameters_as_poles() {
        let inv_scaling = inverse(&TriangleFamily::<f64>::scaling());
        assert_eq!(inv_scaling.poles().len(), 1);
        assert!((inv_scaling.poles()[0] - 0.0).abs() < 1e-9);

        let inv_nedian = inverse(&TriangleFamily::<f64>::nedian());
        assert_eq!(inv_nedian.poles().len(), 1);
        assert!((inv_nedian.poles()[0] - 0.5).abs() < 1e-9);

        // The aliquot family never collapses, so its inverse has no poles.
        assert!(inverse(&TriangleFamily::<f64>::aliquot()).poles().is_empty());
    }

    #[test]
    fn family_triangle_places_aliquot_midpoints_exactly() {
        let reference = reference();
        let aliquot = TriangleFamily::<f64>::aliquot();
        let placed = family_triangle(&reference, &aliquot, &0.5).unwrap();
        let mid = |p: &geom_core::Point2<f64>, q: &geom_core::Point2<f64>| {
            geom_core::Point2::new(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))
        };
        let scale = reference.longest_side();
        assert!(placed.vertices[0].dist(&mid(&reference.b, &reference.c)) < 1e-14 * scale);
        assert!(placed.vertices[1].dist(&mid(&reference.c, &reference.a)) < 1e-14 * scale);
        assert!(placed.vertices[2].dist(&mid(&reference.a, &reference.b)) < 1e-14 * scale);
        assert!(!placed.degenerate);
        assert!(placed.triangle().is_ok());
    }

    #[test]
    fn family_triangle_flags_the_nedian_collapse_as_degenerate() {
        let reference = reference();
        let nedian = TriangleFamily::<f64>::nedian();
        let placed = family_triangle(&reference, &nedian, &0.5).unwrap();
        assert!(placed.degenerate);
        let centroid = reference.centroid();
        assert!(placed.centroid().dist(&centroid) < 1e-13);
        for v in &placed.vertices {
            assert!(v.dist(&centroid) < 1e-13);
        }
        assert!(matches!(
            placed.side_lengths(),
            Err(FamiliesError::DegenerateFamilyTriangle { .. })
        ));
        assert!(matches!(
            placed.triangle(),
            Err(FamiliesError::DegenerateFamilyTriangle { .. })
        ));
    }

    #[test]
    fn family_triangle_rejects_weight_sum_zeros() {
        let family = TriangleFamily::<f64>::new_polynomial(
            "sum-is-t",
            [
                Polynomial::from_f64(&[0.0, 1.0]),
                Polynomial::from_f64(&[1.0]),
                Polynomial::from_f64(&[-1.0]),
            ],
        )
        .unwrap();
        let err = family_triangle(&reference(), &family, &0.0).unwrap_err();
        assert!(matches!(err, FamiliesError::ZeroWeightSum { .. }));

        let reciprocal = TriangleFamily::<f64>::new_closure(
            "reciprocal",
            |t: &f64| [1.0 / t, 1.0 / t, 1.0],
            (-1.0, 1.0),
            vec![0.0],
        )
        .unwrap();
        let err = family_triangle(&reference(), &reciprocal, &0.0).unwrap_err();
        assert!(matches!(err, FamiliesError::NonFiniteEvaluation { .. }));
    }

    #[test]
    fn concat_builds_the_family_triangle_on_the_family_triangle() {
        let reference = reference();
        let f = TriangleFamily::<f64>::aliquot();
        let g = TriangleFamily::<f64>::scaling();
        let t = 0.3;
        let inner = family_triangle(&reference, &g, &t).unwrap();
        let nested = family_triangle(&inner.triangle().unwrap(), &f, &t).unwrap();
        let direct = family_triangle(&reference, &concat(&f, &g), &t).unwrap();
        let scale = reference.longest_side();
        for i in 0..3 {
            assert!(nested.vertices[i].dist(&direct.vertices[i]) < 1e-12 * scale);
        }
    }

    #[test]
    fn nedian_decomposition_recovers_the_closed_forms() {
        let nedian = TriangleFamily::<f64>::nedian();
        let report = decomposability_report(&nedian, 1000);
        assert_eq!(report.verdict, DecomposabilityVerdict::LikelyDecomposable);
        assert!(report.witnesses.is_empty());
        assert_eq!(report.singular_ts.len(), 1);
        assert!((report.singular_ts[0] - 0.5).abs() < 1e-9);

        let decomposition = decompose(&nedian).unwrap();
        let t = 0.2;
        // σ = (1−2t)²/(1−t+t²), τ = (1−t)/(1−2t).
        assert!((decomposition.sigma(&t) - 0.36 / 0.84).abs() < 1e-15);
        assert!((decomposition.tau(&t) - 0.8 / 0.6).abs() < 1e-15);
        let reconstructed = decomposition.reconstruct(&t);
        let residual =
            geom_core::proportionality_residual3(&reconstructed, &nedian.eval(&t)).abs();
        assert!(residual < 1e-14);
        assert!(decomposition.is_singular(0.5));
        assert!(!decomposition.is_singular(0.2));
    }

    #[test]
    fn cubic_composition_decomposes_with_constant_aliquot_parameter() {
        // (1+t, 1, 1−t+3t²) concatenated with the aliquot family has
        // σ(t) = t(3t²−3t+1)/(1+t²) and τ ≡ 1/3.
        let base = TriangleFamily::<f64>::new_polynomial(
            "cubic-composition-base",
            [
                Polynomial::from_f64(&[1.0, 1.0]),
                Polynomial::from_f64(&[1.0]),
                Polynomial::from_f64(&[1.0, -1.0, 3.0]),
            ],
        )
        .unwrap();
        let family = concat(&base, &TriangleFamily::<f64>::aliquot());
        let decomposition = decompose(&family).unwrap();
        let sigma = decomposition.sigma(&0.4);
        assert!((sigma - 0.096_551_724_137_931_034_482_758_620_689_7).abs() < 1e-15);
        for t in [-1.0, 0.4, 2.5] {
            assert!((decomposition.tau(&t) - 1.0 / 3.0).abs() < 1e-13);
        }
        assert_eq!(decomposition.singular_ts().len(), 1);
        assert!(decomposition.singular_ts()[0].abs() < 1e-9);
    }

    #[test]
    fn genuine_spread_at_a_delta_zero_defeats_decomposition() {
        // (1−t, t, 0): delta = 2−3t vanishes at t = 2/3 where the
        // triple is (1/3, 2/3, 0) — far from a centroid collapse.
        let family = TriangleFamily::<f64>::new_polynomial(
            "edge-interpolation",
            [
                Polynomial::from_f64(&[1.0, -1.0]),
                Polynomial::from_f64(&[0.0, 1.0]),
                Polynomial::zero(),
            ],
        )
        .unwrap();
        let report = decomposability_report(&family, 1000);
        assert_eq!(report.verdict, DecomposabilityVerdict::NotDecomposable);
        assert_eq!(report.witnesses.len(), 1);
        assert!((report.witnesses[0].t - 2.0 / 3.0).abs() < 1e-9);
        assert!(report.witnesses[0].spread > 0.9);
        assert!(matches!(
            decompose(&family),
            Err(FamiliesError::NotDecomposable { .. })
        ));
    }

    #[test]
    fn aliquot_concatenated_with_itself_is_not_decomposable() {
        let aliquot = TriangleFamily::<f64>::aliquot();
        let squared = concat(&aliquot, &aliquot);
        let report = decomposability_report(&squared, 1000);
        assert_eq!(report.verdict, DecomposabilityVerdict::NotDecomposable);
        // δ = −6t²+6t−1 has roots 1/2 ± √3/6, both with genuine spread.
        assert_eq!(report.witnesses.len(), 2);
        let r = 3.0_f64.sqrt() / 6.0;
        assert!((report.witnesses[0].t - (0.5 - r)).abs() < 1e-9);
        assert!((report.witnesses[1].t - (0.5 + r)).abs() < 1e-9);
    }

    #[test]
    fn a_constant_delta_zero_family_with_spread_is_not_decomposable() {
        // (1, 1+t, 1−t) has δ ≡ 0 but genuine spread for t ≠ 0: the
        // scaling factor is stuck at zero, so no decomposition exists.
        let family = TriangleFamily::<f64>::new_polynomial(
            "delta-free",
            [
                Polynomial::from_f64(&[1.0]),
                Polynomial::from_f64(&[1.0, 1.0]),
                Polynomial::from_f64(&[1.0, -1.0]),
            ],
        )
        .unwrap();
        let report = decomposability_report(&family, 1000);
        assert_eq!(report.verdict, DecomposabilityVerdict::NotDecomposable);
        assert_eq!(report.witnesses.len(), 1);
    }
}
