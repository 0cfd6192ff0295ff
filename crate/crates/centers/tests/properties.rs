//! Property-based tests of the center-function algebra over random
//! shapes, coefficients and scale factors.

use centers::{
    catalog, constant_affine, cyclic_affine, isogonal_conjugate, normalize, scaled_center, trace,
    CenterFunction, CyclicFactor,
};
use geom_core::{bary_to_point, canonical_placement, trilinear_to_bary, Real, SideLengths};
use proptest::prelude::*;

const INEQ_MARGIN: f64 = 0.02;

fn shape() -> impl Strategy<Value = (f64, f64)> {
    (0.05..1.95f64, 0.05..1.95f64).prop_filter("triangle inequalities with margin", |&(b, c)| {
        b + c > 1.0 + INEQ_MARGIN && 1.0 + c > b + INEQ_MARGIN && 1.0 + b > c + INEQ_MARGIN
    })
}

fn sides(b: f64, c: f64) -> SideLengths<f64> {
    SideLengths::new(1.0, b, c).expect("valid sides")
}

fn rel_close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Normalization makes the trace identically one.
    #[test]
    fn normalized_functions_have_unit_trace((b, c) in shape()) {
        let cat = catalog::<f64>();
        for label in ["X1", "X2", "X3", "X6", "X13", "X15", "X63"] {
            let normalized = normalize(cat.get(label).unwrap()).expect("traceable");
            let tr = trace(&normalized, &sides(b, c));
            prop_assert!(rel_close(tr, 1.0, 1e-9), "{label}: trace {tr}");
        }
    }

    /// The isogonal conjugate is an involution wherever defined.
    #[test]
    fn isogonal_conjugation_is_an_involution(
        (b, c) in shape(),
        alpha in 0.1..5.0f64,
        beta in 0.1..5.0f64,
        gamma in 0.1..5.0f64,
    ) {
        // A strictly positive bi-symmetric quadratic: no poles anywhere.
        let psi = CenterFunction::<f64>::from_fn(Some(2), move |a, b, c| {
            alpha * a * a + beta * (b * b + c * c) + gamma * b * c
        });
        let twice = isogonal_conjugate(&isogonal_conjugate(&psi));
        let s = sides(b, c);
        let original = psi.cyclic_triple(&s);
        let round_trip = twice.cyclic_triple(&s);
        for (x, y) in original.iter().zip(round_trip.iter()) {
            prop_assert!(rel_close(*x, *y, 1e-12));
        }
    }

    /// The trace of a cyclic-affine combination is the same combination
    /// of the parent traces.
    #[test]
    fn cyclic_affine_traces_combine_linearly(
        (b, c) in shape(),
        u in -3.0..3.0f64,
        v in -3.0..3.0f64,
    ) {
        let cat = catalog::<f64>();
        let psi0 = cat.get("X2").unwrap();
        let psi1 = cat.get("X63").unwrap();
        // Cyclic factors of matching product degree: deg(ω0)+deg(ψ0) =
        // 3+(−1) = 0+2 = deg(ω1)+deg(ψ1).
        let omega0 = CyclicFactor::<f64>::from_fn(
            Some(3),
            move |a, b, c| u * (a * a * b + b * b * c + c * c * a),
        );
        let omega1 = CyclicFactor::<f64>::from_fn(Some(0), move |_a, _b, _c| v);
        let combo = cyclic_affine(psi0, psi1, &omega0, &omega1).expect("degrees match");
        let s = sides(b, c);
        let lhs = trace(&combo, &s);
        let rhs = omega0.eval(&1.0, &b, &c) * trace(psi0, &s)
            + omega1.eval(&1.0, &b, &c) * trace(psi1, &s);
        prop_assert!(rel_close(lhs, rhs, 1e-10), "{lhs} vs {rhs}");
    }

    /// The scaled center interpolates linearly between the center and
    /// the centroid in Cartesian coordinates.
    #[test]
    fn scaled_center_interpolates_toward_the_centroid(
        (b, c) in shape(),
        sigma in -1.5..2.5f64,
    ) {
        let cat = catalog::<f64>();
        let s = sides(b, c);
        let tri = canonical_placement(&s).expect("placeable");
        for label in ["X3", "X15"] {
            let psi = cat.get(label).unwrap();
            let scaled = scaled_center(psi, sigma).expect("traceable");
            let point = |f: &CenterFunction<f64>| {
                let bary = trilinear_to_bary(&s, &f.cyclic_triple(&s).into());
                bary_to_point(&tri, &bary).expect("finite")
            };
            let p = point(psi);
            let centroid = tri.centroid();
            let q = point(&scaled);
            let expect_x = (1.0 - sigma) * p.x + sigma * centroid.x;
            let expect_y = (1.0 - sigma) * p.y + sigma * centroid.y;
            prop_assert!(
                rel_close(q.x, expect_x, 1e-9) && rel_close(q.y, expect_y, 1e-9),
                "{label}, σ={sigma}: ({}, {}) vs ({expect_x}, {expect_y})",
                q.x,
                q.y
            );
        }
    }

    /// Constant-affine combinations of two essentially different parents
    /// stay within the pencil: recombining with swapped-sign
    /// coefficients recovers points on the line through the parents.
    #[test]
    fn constant_affine_members_vary_continuously(
        (b, c) in shape(),
        l0 in 0.2..3.0f64,
        l1 in 0.2..3.0f64,
    ) {
        let cat = catalog::<f64>();
        let psi0 = normalize(cat.get("X3").unwrap()).expect("traceable");
        let psi1 = normalize(cat.get("X6").unwrap()).expect("traceable");
        let member = constant_affine(&psi0, &psi1, l0, l1).expect("same degree");
        let s = sides(b, c);
        let tri = canonical_placement(&s).expect("placeable");
        let point = |f: &CenterFunction<f64>| {
            let bary = trilinear_to_bary(&s, &f.cyclic_triple(&s).into());
            bary_to_point(&tri, &bary).expect("finite")
        };
        // For normalized parents the member point is the affine
        // combination with weights l0/(l0+l1), l1/(l0+l1).
        let (p0, p1, q) = (point(&psi0), point(&psi1), point(&member));
        let w = l0 / (l0 + l1);
        let expect_x = w * p0.x + (1.0 - w) * p1.x;
        let expect_y = w * p0.y + (1.0 - w) * p1.y;
        prop_assert!(
            rel_close(q.x, expect_x, 1e-9) && rel_close(q.y, expect_y, 1e-9),
            "({}, {}) vs ({expect_x}, {expect_y})",
            q.x,
            q.y
        );
    }
}
