//! Property-based tests for the triple algebra underlying triangle
//! families.

use families::{
    concat_triples, decompose, delta_triple, normalized_spread, random_decomposable_family,
    TriangleFamily,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn triple() -> impl Strategy<Value = [f64; 3]> {
    prop::array::uniform3(-10.0_f64..10.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Concatenation of triples is commutative.
    #[test]
    fn concatenation_commutes(x in triple(), y in triple()) {
        let xy = concat_triples(&x, &y);
        let yx = concat_triples(&y, &x);
        let scale = xy.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
        for i in 0..3 {
            prop_assert!((xy[i] - yx[i]).abs() <= 1e-12 * scale);
        }
    }

    /// Concatenation of triples is associative.
    #[test]
    fn concatenation_associates(x in triple(), y in triple(), z in triple()) {
        let l = concat_triples(&concat_triples(&x, &y), &z);
        let r = concat_triples(&x, &concat_triples(&y, &z));
        let scale = l.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
        for i in 0..3 {
            prop_assert!((l[i] - r[i]).abs() <= 1e-11 * scale);
        }
    }

    /// Component sums are multiplicative under concatenation.
    #[test]
    fn sums_multiply_under_concatenation(x in triple(), y in triple()) {
        let xy = concat_triples(&x, &y);
        let sum = |v: &[f64; 3]| v[0] + v[1] + v[2];
        let expected = sum(&x) * sum(&y);
        let scale = x.iter().chain(y.iter()).fold(1.0_f64, |m, v| m.max(v.abs()));
        prop_assert!((sum(&xy) - expected).abs() <= 1e-11 * scale * scale);
    }

    /// Concatenating a triple with its inverse yields
    /// `(Ψ1³+Ψ2³+Ψ3³−3Ψ1Ψ2Ψ3, 0, 0)`.
    #[test]
    fn inverse_triples_cancel(x in triple()) {
        let inv = [
            x[0] * x[0] - x[1] * x[2],
            x[2] * x[2] - x[0] * x[1],
            x[1] * x[1] - x[2] * x[0],
        ];
        let round = concat_triples(&x, &inv);
        let expected =
            x[0].powi(3) + x[1].powi(3) + x[2].powi(3) - 3.0 * x[0] * x[1] * x[2];
        let scale = x.iter().fold(1.0_f64, |m, v| m.max(v.abs())).powi(3);
        prop_assert!((round[0] - expected).abs() <= 1e-11 * scale);
        prop_assert!(round[1].abs() <= 1e-11 * scale);
        prop_assert!(round[2].abs() <= 1e-11 * scale);
    }

    /// Delta is linear in the triple.
    #[test]
    fn delta_is_linear(x in triple(), y in triple(), s in -5.0_f64..5.0) {
        let mixed = [x[0] + s * y[0], x[1] + s * y[1], x[2] + s * y[2]];
        let expected = delta_triple(&x) + s * delta_triple(&y);
        prop_assert!((delta_triple(&mixed) - expected).abs() <= 1e-10);
    }

    /// Spread is projective: rescaling a triple never changes it.
    #[test]
    fn spread_is_scale_invariant(x in triple(), k in 0.01_f64..100.0) {
        prop_assume!(x.iter().any(|v| v.abs() > 1e-6));
        let scaled = [k * x[0], k * x[1], k * x[2]];
        let d = (normalized_spread(&x) - normalized_spread(&scaled)).abs();
        prop_assert!(d <= 1e-12);
    }

    /// Randomly composed scaling∘aliquot families always decompose, and
    /// the reconstruction is proportional to the original triple.
    #[test]
    fn decomposable_families_reconstruct(seed in 0_u64..512, idx in 0_usize..40) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (family, _, _) = random_decomposable_family::<f64>(&mut rng, "prop-dec");
        let decomposition = decompose(&family).unwrap();
        let ts = family.sample_parameters(41);
        let t = ts[idx.min(ts.len() - 1)];
        if !decomposition.is_singular(t) {
            let reconstructed = decomposition.reconstruct(&t);
            let original = family.eval(&t);
            let residual =
                geom_core::proportionality_residual3(&reconstructed, &original);
            prop_assert!(residual <= 1e-10, "t = {t}: residual {residual}");
        }
    }

    /// Serialization round-trips random polynomial families exactly.
    #[test]
    fn serialization_round_trips(seed in 0_u64..512) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let family: TriangleFamily<f64> =
            families::random_polynomial_family(&mut rng, "roundtrip", 3);
        let text = family.serialize().unwrap();
        let parsed = TriangleFamily::<f64>::parse(&text).unwrap();
        for t in family.sample_parameters(17) {
            let a = family.eval(&t);
            let b = parsed.eval(&t);
            prop_assert_eq!(a, b);
        }
    }
}
