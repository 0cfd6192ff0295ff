//! Cross-module behavior of the center-function algebra: equivariance
//! of center points under relabeling and scaling, the algebraic
//! properties of the trace, and the Brocard-axis constant-affine
//! identities at sampled shapes.

use centers::sampling::{sample_shape, shape_rng};
use centers::{
    catalog, center_point, constant_affine_member, trace, CenterFunction, CyclicFactor,
    Traceability,
};
use geom_core::{
    canonical_placement, proportionality_residual3, Point2, Real, SideLengths, Triangle,
};

fn sides(b: f64, c: f64) -> SideLengths<f64> {
    SideLengths::new(1.0, b, c).expect("valid sides")
}

fn assert_close(p: &Point2<f64>, q: &Point2<f64>, tol: f64, what: &str) {
    let d = ((p.x - q.x).powi(2) + (p.y - q.y).powi(2)).sqrt();
    let scale = p.x.abs().max(p.y.abs()).max(1.0);
    assert!(
        d <= tol * scale,
        "{what}: points ({}, {}) and ({}, {}) differ by {d:e}",
        p.x,
        p.y,
        q.x,
        q.y
    );
}

/// Relabeling the vertices cyclically (A,B,C) → (B,C,A) permutes the
/// side lengths to (b,c,a) but must leave every center's Cartesian
/// position unchanged.
#[test]
fn center_points_are_equivariant_under_cyclic_relabeling() {
    let cat = catalog::<f64>();
    let mut rng = shape_rng(11);
    for _ in 0..20 {
        let (b, c) = sample_shape(&mut rng);
        let s = sides(b, c);
        let tri = canonical_placement(&s).expect("placeable");
        let rotated_sides = SideLengths::new(b, c, 1.0).expect("valid sides");
        let rotated_tri =
            Triangle::new(tri.b.clone(), tri.c.clone(), tri.a.clone()).expect("same vertices");
        for entry in cat.iter() {
            let (Ok(p), Ok(q)) = (
                center_point(&entry.function, &s, &tri),
                center_point(&entry.function, &rotated_sides, &rotated_tri),
            ) else {
                continue; // a pole of this evaluator at this shape
            };
            let what = format!("{} at ({b}, {c})", entry.label);
            assert_close(&p, &q, 1e-10, &what);
        }
    }
}

/// Scaling the triangle by k scales every center's position by k.
#[test]
fn center_points_are_equivariant_under_scaling() {
    let cat = catalog::<f64>();
    let mut rng = shape_rng(12);
    for _ in 0..20 {
        let (b, c) = sample_shape(&mut rng);
        let s = sides(b, c);
        let tri = canonical_placement(&s).expect("placeable");
        for k in [0.5, 2.0, 7.0] {
            let scaled_sides = SideLengths::new(k, k * b, k * c).expect("valid sides");
            let scale_point = |p: &Point2<f64>| Point2::new(k * p.x, k * p.y);
            let scaled_tri = Triangle::new(
                scale_point(&tri.a),
                scale_point(&tri.b),
                scale_point(&tri.c),
            )
            .expect("valid triangle");
            for entry in cat.iter() {
                let (Ok(p), Ok(q)) = (
                    center_point(&entry.function, &s, &tri),
                    center_point(&entry.function, &scaled_sides, &scaled_tri),
                ) else {
                    continue;
                };
                let what = format!("{} at ({b}, {c}) scaled by {k}", entry.label);
                assert_close(&scale_point(&p), &q, 1e-10, &what);
            }
        }
    }
}

fn rel_close(x: f64, y: f64, tol: f64) -> bool {
    let scale = x.abs().max(y.abs()).max(1.0);
    (x - y).abs() <= tol * scale
}

/// The trace is invariant under cyclic shifts and under swapping the
/// last two sides, homogeneous of degree one more than the function,
/// and multiplies through cyclic coefficient factors.
#[test]
fn trace_is_cyclic_symmetric_homogeneous_and_multiplicative() {
    let cat = catalog::<f64>();
    let mut rng = shape_rng(13);
    // A cyclic-invariant but non-symmetric factor, to exercise the
    // multiplicativity beyond fully symmetric coefficients.
    let cyc = CyclicFactor::<f64>::from_fn(Some(3), |a, b, c| a * a * b + b * b * c + c * c * a);
    let sym = CyclicFactor::<f64>::from_fn(Some(2), |a, b, c| a * a + b * b + c * c);

    for _ in 0..1000 {
        let (b, c) = sample_shape(&mut rng);
        let s = sides(b, c);
        for entry in cat.iter() {
            let tr = trace(&entry.function, &s);
            if !tr.is_finite() {
                continue;
            }
            // Cyclic shift and bi-symmetry of the trace.
            let shifted = trace(&entry.function, &SideLengths::new(b, c, 1.0).unwrap());
            let swapped = trace(&entry.function, &SideLengths::new(1.0, c, b).unwrap());
            assert!(
                rel_close(tr, shifted, 1e-10),
                "{}: trace not cyclic at ({b}, {c}): {tr} vs {shifted}",
                entry.label
            );
            assert!(
                rel_close(tr, swapped, 1e-10),
                "{}: trace not bi-symmetric at ({b}, {c}): {tr} vs {swapped}",
                entry.label
            );
            // Homogeneity of degree k+1.
            let degree = entry.function.degree().expect("catalog degrees are known");
            for k in [0.5, 2.0] {
                let scaled = trace(
                    &entry.function,
                    &SideLengths::new(k, k * b, k * c).unwrap(),
                );
                let predicted = k.powi(degree + 1) * tr;
                assert!(
                    rel_close(scaled, predicted, 1e-10),
                    "{}: trace homogeneity fails at ({b}, {c}), k={k}",
                    entry.label
                );
            }
            // Multiplicativity over cyclic factors: Σ(f·ψ) = f·Σψ.
            for factor in [&cyc, &sym] {
                let eval = entry.function.eval_fn();
                let f = factor.eval_fn();
                let product = CenterFunction::from_fn(None, move |a: &f64, b: &f64, c: &f64| {
                    f(a, b, c) * eval(a, b, c)
                });
                let lhs = trace(&product, &s);
                let rhs = factor.eval(&1.0, &b, &c) * tr;
                assert!(
                    rel_close(lhs, rhs, 1e-10),
                    "{}: trace not multiplicative at ({b}, {c}): {lhs} vs {rhs}",
                    entry.label
                );
            }
        }
    }
}

/// The tabulated constant-affine rescalings of Brocard-axis rows land on
/// their target centers at randomly sampled shapes.
#[test]
fn brocard_identities_hold_at_sampled_shapes() {
    let cat = catalog::<f64>();
    let mut rng = shape_rng(14);
    let identities = centers::constant_affine_identities();
    for _ in 0..100 {
        let (b, c) = sample_shape(&mut rng);
        let s = sides(b, c);
        for id in &identities {
            let member =
                constant_affine_member::<f64>(id.base, id.lambda0, id.lambda1).expect("member");
            let target = cat.get(id.target).unwrap();
            let residual = proportionality_residual3(
                &member.cyclic_triple(&s),
                &target.cyclic_triple(&s),
            );
            assert!(
                residual < 1e-9,
                "{} ({}:{}) → {} fails at ({b}, {c}): residual {residual:e}",
                id.base,
                id.lambda0,
                id.lambda1,
                id.target
            );
        }
    }
}

/// Traceability metadata in the catalog matches what the defining
/// functions do at the equilateral triple: known-yes entries evaluate to
/// a nonzero finite value there, known-no entries vanish, blow up, or
/// have a vanishing trace somewhere.
#[test]
fn traceability_metadata_is_consistent_at_equilateral() {
    let cat = catalog::<f64>();
    for entry in cat.iter() {
        let value = entry.function.eval(&1.0, &1.0, &1.0);
        match entry.function.traceable() {
            Traceability::KnownYes => {
                assert!(
                    value.is_finite() && value != 0.0,
                    "{} is marked traceable but evaluates to {value} at (1,1,1)",
                    entry.label
                );
            }
            Traceability::KnownNo | Traceability::Unknown => {}
        }
    }
}
