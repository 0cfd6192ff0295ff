//! Seeded random generation of triangle families for testing.

use rand::Rng;

use geom_core::Real;

use crate::family::TriangleFamily;
use crate::polynomial::Polynomial;

/// Minimum of `|Ψ1+Ψ2+Ψ3|` over the sampled domain, relative to the
/// largest component magnitude, for an accepted random family. Keeps
/// family triangles well conditioned over the whole domain.
const MIN_SUM_REL: f64 = 0.05;

/// Grid size for the acceptance check.
const ACCEPT_SAMPLES: usize = 257;

/// Rejection-sampling attempt budget.
const MAX_ATTEMPTS: usize = 4096;

/// Draws a random polynomial family with components of the given
/// degree and coefficients in `[−1, 1]`, rejecting candidates whose
/// weight sum comes close to zero anywhere on the domain.
pub fn random_polynomial_family<R: Real>(
    rng: &mut impl Rng,
    label: &str,
    degree: usize,
) -> TriangleFamily<R> {
    for _ in 0..MAX_ATTEMPTS {
        let component = |rng: &mut dyn FnMut() -> f64| {
            let coeffs: Vec<f64> = (0..=degree).map(|_| rng()).collect();
            Polynomial::<R>::from_f64(&coeffs)
        };
        let mut draw = || rng.random_range(-1.0..1.0);
        let components = [
            component(&mut draw),
            component(&mut draw),
            component(&mut draw),
        ];
        let family = match TriangleFamily::new_polynomial(label, components) {
            Ok(f) => f,
            Err(_) => continue,
        };
        let mut min_sum = f64::INFINITY;
        let mut max_comp: f64 = 0.0;
        for t in family.sample_parameters(ACCEPT_SAMPLES) {
            let triple = family.eval_f64(t);
            let vals: Vec<f64> = triple.iter().map(Real::to_f64).collect();
            min_sum = min_sum.min((vals[0] + vals[1] + vals[2]).abs());
            max_comp = max_comp.max(vals.iter().fold(0.0_f64, |a, v| a.max(v.abs())));
        }
        if min_sum >= MIN_SUM_REL * max_comp {
            return family;
        }
    }
    unreachable!("rejection sampling budget exhausted for random polynomial family")
}

/// Draws a family that is decomposable by construction:
/// `Φ_scaling(σ(t)) ∘ Φ_aliquot(τ(t))` with a quadratic `σ` kept
/// strictly positive on the domain and a quadratic `τ`. Returns the
/// composed polynomial family together with the ground-truth `σ` and
/// `τ` polynomials.
pub fn random_decomposable_family<R: Real>(
    rng: &mut impl Rng,
    label: &str,
) -> (TriangleFamily<R>, Polynomial<R>, Polynomial<R>) {
    // On the default domain |t| ≤ 3, the non-constant terms are bounded
    // by 0.05·3 + 0.02·9 = 0.33, so σ ≥ 0.5 − 0.33 > 0 everywhere.
    let sigma = Polynomial::<R>::from_f64(&[
        rng.random_range(0.5..1.5),
        rng.random_range(-0.05..0.05),
        rng.random_range(-0.02..0.02),
    ]);
    let tau = Polynomial::<R>::from_f64(&[
        rng.random_range(-1.0..1.0),
        rng.random_range(-0.5..0.5),
        rng.random_range(-0.25..0.25),
    ]);

    let scaling = TriangleFamily::<R>::scaling();
    let aliquot = TriangleFamily::<R>::aliquot();
    let s = scaling.polynomials().expect("scaling is polynomial");
    let a = aliquot.polynomials().expect("aliquot is polynomial");
    let s: Vec<Polynomial<R>> = s.iter().map(|p| p.compose(&sigma)).collect();
    let a: Vec<Polynomial<R>> = a.iter().map(|p| p.compose(&tau)).collect();

    // Concatenation of the composed triples, written out on
    // coefficients so the result is an exact polynomial family.
    let c1 = s[0].mul(&a[0]).add(&s[1].mul(&a[2])).add(&s[2].mul(&a[1]));
    let c2 = s[0].mul(&a[1]).add(&s[1].mul(&a[0])).add(&s[2].mul(&a[2]));
    let c3 = s[0].mul(&a[2]).add(&s[1].mul(&a[1])).add(&s[2].mul(&a[0]));
    let family = TriangleFamily::new_polynomial(label, [c1, c2, c3])
        .expect("composed scaling∘aliquot family is valid by construction");
    (family, sigma, tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_families_keep_their_weight_sum_away_from_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for i in 0..10 {
            let family =
                random_polynomial_family::<f64>(&mut rng, &format!("random-{i}"), 3);
            let mut min_sum = f64::INFINITY;
            let mut max_comp: f64 = 0.0;
            for t in family.sample_parameters(101) {
                let [p1, p2, p3] = family.eval_f64(t);
                min_sum = min_sum.min((p1 + p2 + p3).abs());
                max_comp = max_comp.max(p1.abs().max(p2.abs()).max(p3.abs()));
            }
            assert!(min_sum >= MIN_SUM_REL * max_comp);
        }
    }

    #[test]
    fn random_families_are_reproducible_for_a_fixed_seed() {
        let f1 = random_polynomial_family::<f64>(&mut ChaCha8Rng::seed_from_u64(42), "a", 2);
        let f2 = random_polynomial_family::<f64>(&mut ChaCha8Rng::seed_from_u64(42), "a", 2);
        for t in [-1.5, 0.0, 0.7, 2.9] {
            assert_eq!(f1.eval(&t), f2.eval(&t));
        }
    }

    #[test]
    fn decomposable_samples_recover_their_ground_truth() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..5 {
            let (family, sigma, tau) =
                random_decomposable_family::<f64>(&mut rng, &format!("dec-{i}"));
            let decomposition = crate::ops::decompose(&family).expect("decomposable");
            for t in family.sample_parameters(41) {
                if decomposition.is_singular(t) {
                    continue;
                }
                assert!((decomposition.sigma(&t) - sigma.eval(&t)).abs() < 1e-9);
                assert!((decomposition.tau(&t) - tau.eval(&t)).abs() < 1e-9);
            }
        }
    }
}
