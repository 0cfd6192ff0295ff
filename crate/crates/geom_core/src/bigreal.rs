//! Extended precision scalar backed by a big-float implementation.
//!
//! [`BigReal`] wraps a correctly rounded arbitrary precision float and
//! implements [`Real`], so every algorithm in the workspace can be re-run
//! with a configurable mantissa width. Precision is a thread-local
//! setting: computations on different threads may use different widths
//! without interfering.

use std::cell::{Cell, RefCell};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, RoundingMode, Sign, WORD_BIT_SIZE};

use crate::real::Real;

/// Rounding mode applied to every big-float operation.
const RM: RoundingMode = RoundingMode::ToEven;

/// Smallest accepted mantissa width in bits.
pub const MIN_PRECISION_BITS: usize = 128;

/// Mantissa width used when none has been configured.
pub const DEFAULT_PRECISION_BITS: usize = 256;

thread_local! {
    static PRECISION: Cell<usize> = const { Cell::new(DEFAULT_PRECISION_BITS) };
    static CONSTS: RefCell<Consts> = RefCell::new(
        Consts::new().expect("allocating the big-float constants cache cannot fail"),
    );
}

/// Sets the mantissa width (in bits) used by [`BigReal`] arithmetic on the
/// current thread. Values below [`MIN_PRECISION_BITS`] are clamped up.
pub fn set_precision_bits(bits: usize) {
    PRECISION.with(|p| p.set(bits.max(MIN_PRECISION_BITS)));
}

/// Returns the mantissa width (in bits) currently in effect on this thread.
pub fn precision_bits() -> usize {
    PRECISION.with(Cell::get)
}

#[inline]
fn prec() -> usize {
    precision_bits()
}

/// Extended precision real number.
///
/// Arithmetic is performed at the thread-local precision configured via
/// [`set_precision_bits`], rounding to even. Comparisons treat NaN like
/// `f64` does: NaN is unordered and unequal to everything, including
/// itself.
#[derive(Clone, Debug)]
pub struct BigReal(BigFloat);

impl BigReal {
    /// Wraps an existing big-float value.
    #[inline]
    pub fn from_bigfloat(value: BigFloat) -> Self {
        BigReal(value)
    }

    /// Borrows the underlying big-float value.
    #[inline]
    pub fn as_bigfloat(&self) -> &BigFloat {
        &self.0
    }

    /// Unwraps into the underlying big-float value.
    #[inline]
    pub fn into_bigfloat(self) -> BigFloat {
        self.0
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        matches!(self.0.cmp(&other.0), Some(0))
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|s| s.cmp(&0))
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for BigReal {
            type Output = BigReal;
            #[inline]
            fn $method(self, rhs: BigReal) -> BigReal {
                BigReal(self.0.$method(&rhs.0, prec(), RM))
            }
        }

        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            #[inline]
            fn $method(self, rhs: &BigReal) -> BigReal {
                BigReal(self.0.$method(&rhs.0, prec(), RM))
            }
        }

        impl $trait<BigReal> for &BigReal {
            type Output = BigReal;
            #[inline]
            fn $method(self, rhs: BigReal) -> BigReal {
                BigReal(self.0.$method(&rhs.0, prec(), RM))
            }
        }

        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            #[inline]
            fn $method(self, rhs: &BigReal) -> BigReal {
                BigReal(self.0.$method(&rhs.0, prec(), RM))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

impl Neg for BigReal {
    type Output = BigReal;
    #[inline]
    fn neg(self) -> BigReal {
        BigReal(BigFloat::neg(&self.0))
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    #[inline]
    fn neg(self) -> BigReal {
        BigReal(BigFloat::neg(&self.0))
    }
}

impl Real for BigReal {
    fn from_f64(value: f64) -> Self {
        // The backend halves subnormal inputs (it assumes the implicit
        // leading mantissa bit, which subnormals do not have). Scale such
        // values into the normal range first and undo the exact
        // power-of-two factor afterwards.
        if value != 0.0 && value.is_finite() && value.abs() < f64::MIN_POSITIVE {
            let scaled = BigFloat::from_f64(value * 2f64.powi(64), prec());
            let factor = BigFloat::from_f64(2f64.powi(-64), prec());
            return BigReal(scaled.mul(&factor, prec(), RM));
        }
        BigReal(BigFloat::from_f64(value, prec()))
    }

    /// Rounds to the nearest `f64` by truncating the mantissa to its top
    /// 128 bits and scaling by the binary exponent. Values beyond the
    /// `f64` range overflow to infinity or underflow to zero.
    fn to_f64(&self) -> f64 {
        if self.0.is_nan() {
            return f64::NAN;
        }
        if self.0.is_inf_pos() {
            return f64::INFINITY;
        }
        if self.0.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        if self.0.is_zero() {
            return 0.0;
        }
        let (words, _p, sign, exponent, _inexact) = self
            .0
            .as_raw_parts()
            .expect("finite nonzero big-float exposes raw parts");
        // Words are little-endian; the most significant word comes last
        // and has its top bit set. Collect up to 128 leading bits.
        let mut frac: u128 = 0;
        let mut bits: usize = 0;
        for word in words.iter().rev() {
            if bits + WORD_BIT_SIZE > 128 {
                break;
            }
            frac = (frac << WORD_BIT_SIZE) | u128::from(*word);
            bits += WORD_BIT_SIZE;
        }
        // The mantissa represents a fraction in [0.5, 1); the value is
        // fraction * 2^exponent, hence frac * 2^(exponent - bits). The
        // power is applied in two halves so values near the edges of the
        // f64 range do not underflow or overflow in an intermediate step.
        let shift = exponent - bits as i32;
        let (s1, s2) = (shift / 2, shift - shift / 2);
        let magnitude = (frac as f64) * 2f64.powi(s1) * 2f64.powi(s2);
        match sign {
            Sign::Pos => magnitude,
            Sign::Neg => -magnitude,
        }
    }

    fn sqrt(&self) -> Self {
        BigReal(self.0.sqrt(prec(), RM))
    }

    fn abs(&self) -> Self {
        BigReal(self.0.abs())
    }

    fn sin(&self) -> Self {
        CONSTS.with(|cc| BigReal(self.0.sin(prec(), RM, &mut cc.borrow_mut())))
    }

    fn cos(&self) -> Self {
        CONSTS.with(|cc| BigReal(self.0.cos(prec(), RM, &mut cc.borrow_mut())))
    }

    fn is_finite(&self) -> bool {
        !(self.0.is_nan() || self.0.is_inf())
    }

    fn max_of(&self, other: &Self) -> Self {
        BigReal(self.0.max(&other.0))
    }

    fn min_of(&self, other: &Self) -> Self {
        BigReal(self.0.min(&other.0))
    }

    fn pi() -> Self {
        CONSTS.with(|cc| BigReal(cc.borrow_mut().pi(prec(), RM)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(v: f64) -> BigReal {
        BigReal::from_f64(v)
    }

    #[test]
    fn f64_round_trip_is_exact_for_representable_values() {
        for v in [
            0.0,
            1.0,
            -1.0,
            0.5,
            -3.25,
            1.0 / 3.0,
            6.02e23,
            f64::MAX,
            f64::MIN_POSITIVE,
        ] {
            assert_eq!(br(v).to_f64(), v, "round trip failed for {v}");
        }
    }

    #[test]
    fn subnormal_inputs_survive_the_backend_workaround() {
        for v in [-2.2e-308, f64::MIN_POSITIVE / 4.0, 5e-324, -5e-324] {
            assert_eq!(br(v).to_f64(), v, "round trip failed for {v:e}");
        }
    }

    #[test]
    fn to_f64_classifies_non_finite_values() {
        assert!(br(f64::NAN).to_f64().is_nan());
        assert_eq!(br(f64::INFINITY).to_f64(), f64::INFINITY);
        assert_eq!(br(f64::NEG_INFINITY).to_f64(), f64::NEG_INFINITY);
        assert!(!br(f64::NAN).is_finite());
        assert!(!br(f64::INFINITY).is_finite());
        assert!(br(1.5).is_finite());
    }

    #[test]
    fn arithmetic_matches_f64_on_simple_expressions() {
        let x = br(1.25) * br(-8.0) + br(3.0) / br(4.0) - br(0.75);
        assert_eq!(x.to_f64(), 1.25 * -8.0 + 3.0 / 4.0 - 0.75);
        assert_eq!((-br(2.5)).to_f64(), -2.5);
        assert_eq!((-&br(2.5)).to_f64(), -2.5);
    }

    #[test]
    fn sqrt_exceeds_f64_precision() {
        // sqrt(2) at 256 bits, squared, should return to 2 far more
        // closely than f64 could manage.
        let two = br(2.0);
        let root = two.sqrt();
        let back = root.clone() * &root;
        let err = (back - &two).abs();
        assert!(err < br(1e-70), "residual {} too large", err.to_f64());
        assert!((root.to_f64() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn trig_and_pi_are_consistent() {
        let pi = BigReal::pi();
        assert!((pi.to_f64() - std::f64::consts::PI).abs() < 1e-15);
        let s = pi.sin();
        assert!(s.abs() < br(1e-70), "sin(pi) = {}", s.to_f64());
        let third = pi / br(3.0);
        assert!((third.cos().to_f64() - 0.5).abs() < 1e-15);
        assert!((third.sin().to_f64() - 0.75f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn comparisons_follow_ieee_conventions() {
        assert!(br(1.0) < br(2.0));
        assert!(br(-3.0) < br(-2.0));
        assert_eq!(br(1.5), br(1.5));
        let nan = br(f64::NAN);
        assert!(nan != nan.clone());
        assert_eq!(nan.partial_cmp(&br(0.0)), None);
        assert_eq!(br(2.0).max_of(&br(3.0)).to_f64(), 3.0);
        assert_eq!(br(2.0).min_of(&br(-3.0)).to_f64(), -3.0);
    }

    #[test]
    fn precision_is_thread_local_and_clamped() {
        let original = precision_bits();
        set_precision_bits(512);
        assert_eq!(precision_bits(), 512);
        set_precision_bits(1);
        assert_eq!(precision_bits(), MIN_PRECISION_BITS);
        set_precision_bits(original);
    }

    #[test]
    fn powi_default_implementation_works_on_bigreal() {
        let x = br(1.0) / br(3.0);
        let cubed = x.powi(3);
        let expected = br(1.0) / br(27.0);
        assert!((cubed - &expected).abs() < br(1e-70));
        let inv = br(2.0).powi(-2);
        assert_eq!(inv.to_f64(), 0.25);
    }
}
