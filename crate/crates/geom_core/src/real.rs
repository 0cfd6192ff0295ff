//! Scalar abstraction over double and extended precision arithmetic.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Field-like scalar used throughout the workspace.
///
/// Implemented by `f64` and by [`crate::BigReal`]. The supertraits demand
/// the four arithmetic operators with an owned left operand and either an
/// owned or a borrowed right operand, so formula code writes `a * &b` and
/// clones the left side when a value is reused.
///
/// Conversions to and from `f64` are intentionally lossy: `from_f64` is
/// how literal constants enter generic code, and `to_f64` is how results
/// leave it for reporting and plotting.
pub trait Real:
    Sized
    + Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    /// Converts a double precision value into this scalar type.
    fn from_f64(value: f64) -> Self;

    /// Rounds this scalar to the nearest double precision value.
    fn to_f64(&self) -> f64;

    /// Square root; NaN for negative input.
    fn sqrt(&self) -> Self;

    /// Absolute value.
    fn abs(&self) -> Self;

    /// Sine of an angle in radians.
    fn sin(&self) -> Self;

    /// Cosine of an angle in radians.
    fn cos(&self) -> Self;

    /// True when the value is neither NaN nor infinite.
    fn is_finite(&self) -> bool;

    /// The larger of `self` and `other`.
    fn max_of(&self, other: &Self) -> Self;

    /// The smaller of `self` and `other`.
    fn min_of(&self, other: &Self) -> Self;

    /// Additive identity.
    #[inline]
    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    /// Multiplicative identity.
    #[inline]
    fn one() -> Self {
        Self::from_f64(1.0)
    }

    /// The circle constant at the working precision.
    #[inline]
    fn pi() -> Self {
        Self::from_f64(std::f64::consts::PI)
    }

    /// Converts a small integer into this scalar type.
    #[inline]
    fn from_i32(value: i32) -> Self {
        Self::from_f64(f64::from(value))
    }

    /// Integer power by binary exponentiation; negative exponents take the
    /// reciprocal of the positive power.
    fn powi(&self, n: i32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * &base;
            }
        }
        if n < 0 {
            Self::one() / result
        } else {
            result
        }
    }

    /// Reciprocal.
    #[inline]
    fn recip(&self) -> Self {
        Self::one() / self
    }

    /// True when `self` and `other` agree within `tol` relative to the
    /// larger magnitude, or within `tol` absolutely when both are tiny.
    fn approx_eq_rel(&self, other: &Self, tol: f64) -> bool {
        let t = Self::from_f64(tol);
        let diff = (self.clone() - other).abs();
        let scale = self.abs().max_of(&other.abs()).max_of(&Self::one());
        diff <= t * scale
    }
}

impl Real for f64 {
    #[inline]
    fn from_f64(value: f64) -> Self {
        value
    }

    #[inline]
    fn to_f64(&self) -> f64 {
        *self
    }

    #[inline]
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }

    #[inline]
    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    #[inline]
    fn sin(&self) -> Self {
        f64::sin(*self)
    }

    #[inline]
    fn cos(&self) -> Self {
        f64::cos(*self)
    }

    #[inline]
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    #[inline]
    fn max_of(&self, other: &Self) -> Self {
        f64::max(*self, *other)
    }

    #[inline]
    fn min_of(&self, other: &Self) -> Self {
        f64::min(*self, *other)
    }

    #[inline]
    fn pi() -> Self {
        std::f64::consts::PI
    }

    #[inline]
    fn powi(&self, n: i32) -> Self {
        f64::powi(*self, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exercises every operand combination the trait promises, in a
    /// context that only knows `R: Real`.
    fn generic_arithmetic<R: Real>() -> R {
        let two = R::from_f64(2.0);
        let three = R::from_f64(3.0);
        let owned = two.clone() * three.clone();
        let owned_ref = two.clone() * &three;
        let neg = -two;
        owned + &owned_ref + neg
    }

    #[test]
    fn f64_satisfies_all_operand_combinations() {
        let v: f64 = generic_arithmetic();
        assert_eq!(v, 2.0 * 6.0 - 2.0);
    }

    #[test]
    fn powi_matches_repeated_multiplication() {
        let x: f64 = 1.37;
        assert!((Real::powi(&x, 5) - x * x * x * x * x).abs() < 1e-14);
        assert!((Real::powi(&x, 0) - 1.0).abs() == 0.0);
        assert!((Real::powi(&x, -3) - 1.0 / (x * x * x)).abs() < 1e-14);
    }

    #[test]
    fn approx_eq_rel_scales_with_magnitude() {
        let a = 1.0e12;
        let b = 1.0e12 + 1.0;
        assert!(a.approx_eq_rel(&b, 1e-9));
        assert!(!a.approx_eq_rel(&b, 1e-15));
    }
}
