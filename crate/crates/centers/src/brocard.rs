//! Brocard-axis representations of catalog centers.
//!
//! Every catalog center lying on the Brocard axis can be written as a
//! cyclic-affine combination of the circumcenter function
//! `φ3 = a(−a²+b²+c²)` and the symmedian function `φ6 = a`:
//!
//! ```text
//! φ_i ≅ ω3·φ3 + ω6·φ6
//! ```
//!
//! with cyclic (in fact symmetric) coefficient functions `ω3`, `ω6`.
//! This module tabulates those coefficient rows, rebuilds the members
//! from them, and records the constant-affine identities that relate
//! rescalings of one row to another Brocard-axis center. All
//! coefficients were cross-checked numerically at 50-digit precision
//! against the catalog forms.

use std::sync::Arc;

use geom_core::Real;

use crate::catalog::four_area;
use crate::error::CentersError;
use crate::function::{CenterFunction, CyclicFactor, Traceability};
use crate::ops::{constant_affine, cyclic_affine};

/// A Brocard-axis center expressed through its coefficient pair over
/// `(φ3, φ6)`.
pub struct BrocardRow<R: Real> {
    /// Catalog label of the represented center, e.g. `"X15"`.
    pub label: &'static str,
    /// Coefficient of the circumcenter function `φ3`.
    pub omega3: CyclicFactor<R>,
    /// Coefficient of the symmedian function `φ6`.
    pub omega6: CyclicFactor<R>,
}

fn sq<R: Real>(x: &R) -> R {
    x.clone() * x
}

/// `a² + b² + c²`.
fn sum_sq<R: Real>(a: &R, b: &R, c: &R) -> R {
    sq(a) + sq(b) + sq(c)
}

/// `Q = −2a²b²c² − (−a²+b²+c²)(a²−b²+c²)(a²+b²−c²)`, the degree-6
/// symmetric polynomial appearing in the rows of X50 and X52.
fn q_poly<R: Real>(a: &R, b: &R, c: &R) -> R {
    let (a2, b2, c2) = (sq(a), sq(b), sq(c));
    let product = (-a2.clone() + &b2 + &c2)
        * (a2.clone() - &b2 + &c2)
        * (a2.clone() + &b2 - &c2);
    -(R::from_f64(2.0) * a2 * b2 * c2) - product
}

/// The circumcenter function `φ3 = a(−a²+b²+c²)`.
fn phi3<R: Real>() -> CenterFunction<R> {
    CenterFunction::from_fn(Some(3), |a: &R, b: &R, c: &R| {
        a.clone() * (-sq(a) + sq(b) + sq(c))
    })
}

/// The symmedian function `φ6 = a`.
fn phi6<R: Real>() -> CenterFunction<R> {
    CenterFunction::from_fn(Some(1), |a: &R, _b: &R, _c: &R| a.clone())
}

/// The coefficient rows over `(φ3, φ6)` for each Brocard-axis catalog
/// center, in catalog label order.
pub fn brocard_rows<R: Real>() -> Vec<BrocardRow<R>> {
    let rt3 = || CyclicFactor::<R>::from_fn(Some(0), |_a, _b, _c| R::from_f64(3.0).sqrt());
    let row = |label, omega3, omega6| BrocardRow {
        label,
        omega3,
        omega6,
    };
    vec![
        row(
            "X15",
            rt3(),
            CyclicFactor::from_fn(Some(2), |a: &R, b, c| four_area(a, b, c)),
        ),
        row(
            "X16",
            rt3(),
            CyclicFactor::from_fn(Some(2), |a: &R, b, c| -four_area(a, b, c)),
        ),
        row(
            "X32",
            CyclicFactor::constant(-R::one()),
            CyclicFactor::from_fn(Some(2), |a: &R, b, c| sum_sq(a, b, c)),
        ),
        row(
            "X39",
            CyclicFactor::constant(R::one()),
            CyclicFactor::from_fn(Some(2), |a: &R, b, c| sum_sq(a, b, c)),
        ),
        row(
            "X50",
            CyclicFactor::from_fn(Some(4), |a: &R, b, c| sq(&four_area(a, b, c))),
            CyclicFactor::from_fn(Some(6), |a: &R, b, c| q_poly(a, b, c)),
        ),
        row(
            "X52",
            CyclicFactor::from_fn(Some(6), |a: &R, b, c| {
                let abc = a.clone() * b * c;
                q_poly(a, b, c) - R::from_f64(2.0) * sq(&abc)
            }),
            CyclicFactor::from_fn(Some(8), |a: &R, b, c| sq(&sq(&four_area(a, b, c)))),
        ),
        row(
            "X58",
            CyclicFactor::constant(-R::one()),
            CyclicFactor::from_fn(Some(2), |a: &R, b, c| sq(&(a.clone() + b + c))),
        ),
        row(
            "X61",
            CyclicFactor::constant(R::one()),
            CyclicFactor::from_fn(Some(2), |a: &R, b, c| {
                R::from_f64(3.0).sqrt() * four_area(a, b, c)
            }),
        ),
        row(
            "X62",
            CyclicFactor::constant(R::one()),
            CyclicFactor::from_fn(Some(2), |a: &R, b, c| {
                -(R::from_f64(3.0).sqrt() * four_area(a, b, c))
            }),
        ),
    ]
}

/// Rebuilds the center function `ω3·φ3 + ω6·φ6` of a row.
pub fn brocard_member<R: Real>(row: &BrocardRow<R>) -> Result<CenterFunction<R>, CentersError> {
    cyclic_affine(&phi3::<R>(), &phi6::<R>(), &row.omega3, &row.omega6)
}

/// A constant-affine identity between Brocard-axis representations:
/// rescaling the row of `base` by `(λ0, λ1)` lands (projectively) on the
/// catalog center `target`.
#[derive(Clone, Copy, Debug)]
pub struct ConstantAffineIdentity {
    pub base: &'static str,
    pub lambda0: f64,
    pub lambda1: f64,
    pub target: &'static str,
}

/// The complete table of constant-affine identities among the
/// isodynamic-axis rows (X15, X16, X61, X62) and the Brocard-median
/// pair (X32, X39).
pub fn constant_affine_identities() -> Vec<ConstantAffineIdentity> {
    let id = |base, lambda0, lambda1, target| ConstantAffineIdentity {
        base,
        lambda0,
        lambda1,
        target,
    };
    vec![
        id("X15", -1.0, 1.0, "X16"),
        id("X15", 1.0, 3.0, "X61"),
        id("X15", -1.0, 3.0, "X62"),
        id("X16", -1.0, 1.0, "X15"),
        id("X16", -1.0, 3.0, "X61"),
        id("X16", 1.0, 3.0, "X62"),
        id("X32", -1.0, 1.0, "X39"),
        id("X39", -1.0, 1.0, "X32"),
        id("X61", 3.0, 1.0, "X15"),
        id("X61", -3.0, 1.0, "X16"),
        id("X61", -1.0, 1.0, "X62"),
        id("X62", -3.0, 1.0, "X15"),
        id("X62", 3.0, 1.0, "X16"),
        id("X62", -1.0, 1.0, "X61"),
    ]
}

/// The constant-affine rescaling `λ0·(ω3·φ3) + λ1·(ω6·φ6)` of the row
/// of `base`.
///
/// With `(λ0, λ1) = (1, 1)` this reproduces the base center itself; the
/// pairs tabulated in [`constant_affine_identities`] land on the other
/// Brocard-axis centers.
pub fn constant_affine_member<R: Real>(
    base: &str,
    lambda0: R,
    lambda1: R,
) -> Result<CenterFunction<R>, CentersError> {
    let rows = brocard_rows::<R>();
    let row = rows
        .iter()
        .find(|row| row.label == base)
        .ok_or_else(|| CentersError::UnknownCenter {
            label: base.to_owned(),
        })?;
    let (e3, e6) = (phi3::<R>(), phi6::<R>());
    let (f3, f6) = (e3.eval_fn(), e6.eval_fn());
    let (w3, w6) = (row.omega3.eval_fn(), row.omega6.eval_fn());
    let d3 = row.omega3.degree().map(|d| d + 3);
    let d6 = row.omega6.degree().map(|d| d + 1);
    let p0 = CenterFunction::new(
        None,
        None,
        d3,
        Traceability::Unknown,
        Arc::new(move |a: &R, b: &R, c: &R| w3(a, b, c) * f3(a, b, c)),
    );
    let p1 = CenterFunction::new(
        None,
        None,
        d6,
        Traceability::Unknown,
        Arc::new(move |a: &R, b: &R, c: &R| w6(a, b, c) * f6(a, b, c)),
    );
    constant_affine(&p0, &p1, lambda0, lambda1)
}
