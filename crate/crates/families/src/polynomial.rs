//! Dense univariate polynomials with ascending coefficient storage.
//!
//! These are deliberately minimal: the family algebra only needs
//! evaluation, ring operations for concatenation/inversion, and a
//! plain-text coefficient format for serialization.

use std::fmt;

use geom_core::Real;

use crate::error::FamiliesError;

/// A polynomial `c0 + c1·t + c2·t² + …` stored as ascending
/// coefficients with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Real> Polynomial<R> {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&R::zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(R::zero());
        }
        Polynomial { coeffs }
    }

    /// Builds from ascending `f64` coefficients.
    pub fn from_f64(coeffs: &[f64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| R::from_f64(c)).collect())
    }

    /// The constant polynomial.
    pub fn constant(value: R) -> Self {
        Polynomial::new(vec![value])
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial::constant(R::zero())
    }

    /// Ascending coefficients (at least one entry).
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Degree of the polynomial; 0 for constants including zero.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// True when every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == R::zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &R) -> R {
        let mut acc = self.coeffs.last().expect("nonempty").clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc * t + c;
        }
        acc
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(R::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(R::zero);
            out.push(a + b);
        }
        Polynomial::new(out)
    }

    /// Difference of two polynomials.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    /// Product of two polynomials (coefficient convolution).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + (a.clone() * b);
            }
        }
        Polynomial::new(out)
    }

    /// Polynomial composition `self(inner(t))`, by Horner's scheme over
    /// polynomial arithmetic.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Polynomial::constant(self.coeffs.last().expect("nonempty").clone());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(inner).add(&Polynomial::constant(c.clone()));
        }
        acc
    }

    /// Multiplication by a scalar.
    pub fn scale(&self, factor: &R) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .map(|c| c.clone() * factor)
                .collect(),
        )
    }

    /// Space-separated ascending coefficients, e.g. `"1 -2 1"` for
    /// `(1−t)²`.
    pub fn serialize(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_f64().to_string()).collect();
        parts.join(" ")
    }

    /// Parses space-separated ascending coefficients.
    pub fn parse(text: &str) -> Result<Self, FamiliesError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(FamiliesError::Parse {
                reason: "empty polynomial".to_owned(),
            });
        }
        let coeffs: Result<Vec<f64>, _> = trimmed
            .split_whitespace()
            .map(str::parse::<f64>)
            .collect();
        match coeffs {
            Ok(values) if values.iter().all(|v| v.is_finite()) => {
                Ok(Polynomial::from_f64(&values))
            }
            Ok(_) => Err(FamiliesError::Parse {
                reason: format!("non-finite coefficient in {trimmed:?}"),
            }),
            Err(e) => Err(FamiliesError::Parse {
                reason: format!("bad coefficient in {trimmed:?}: {e}"),
            }),
        }
    }
}

impl<R: Real> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}
