//! Deterministic seeded sampling of the triangle shape region.
//!
//! Shapes are represented by `(b, c)` with the first side fixed at
//! `a = 1`; both free sides range over `(0.05, 1.95)` and the strict
//! triangle inequalities must hold with a margin of `0.02`. The bounds
//! keep samples away from numerically degenerate slivers, and the fixed
//! seed makes every report reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Lower bound for the free side lengths.
pub const SHAPE_MIN: f64 = 0.05;

/// Upper bound for the free side lengths.
pub const SHAPE_MAX: f64 = 1.95;

/// Margin by which the strict triangle inequalities must hold.
pub const INEQ_MARGIN: f64 = 0.02;

/// True when `(1, b, c)` is inside the sampled shape region.
pub fn is_valid_shape(b: f64, c: f64) -> bool {
    let a = 1.0;
    b > SHAPE_MIN
        && b < SHAPE_MAX
        && c > SHAPE_MIN
        && c < SHAPE_MAX
        && a + INEQ_MARGIN < b + c
        && b + INEQ_MARGIN < c + a
        && c + INEQ_MARGIN < a + b
}

/// A reproducible generator for the given seed.
pub fn shape_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws one shape `(b, c)` uniformly from the valid region.
pub fn sample_shape<G: Rng>(rng: &mut G) -> (f64, f64) {
    loop {
        let b = rng.random_range(SHAPE_MIN..SHAPE_MAX);
        let c = rng.random_range(SHAPE_MIN..SHAPE_MAX);
        if is_valid_shape(b, c) {
            return (b, c);
        }
    }
}

/// Draws `n` shapes from a generator seeded with `seed`.
pub fn sample_shapes(n: usize, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = shape_rng(seed);
    (0..n).map(|_| sample_shape(&mut rng)).collect()
}
