//! Canonical trisectrix curves and unsheared shape curves.
//!
//! The Maclaurin trisectrix is the cubic `2x(x²+y²) = k(3x²−y²)`; the
//! Limaçon trisectrix is the quartic `k²(x²+y²) = (x²+y²−2kx)²`. Both
//! carry rational parametrizations whose parameter matches the triangle
//! family parameter, which is what makes traced center curves
//! identifiable as sheared copies of them.

use std::sync::Arc;

use geom_core::{Point2, Real};

/// The Maclaurin trisectrix parametrization
/// `M(t) = 3k/(2(1−3(1−t)t)) · ((1−t)t, √3(1−t)t(1−2t))`.
///
/// The denominator `1 − 3(1−t)t = 1 − 3t + 3t²` is positive for every
/// real `t` (its minimum is 1/4 at `t = 1/2`), so the parametrization
/// is defined on the whole line.
pub fn maclaurin_point<R: Real>(k: &R, t: &R) -> Point2<R> {
    let one = R::one();
    let u = (one.clone() - t) * t; // (1−t)t
    let den = one.clone() - R::from_f64(3.0) * u.clone();
    let lead = R::from_f64(1.5) * k.clone() / den;
    let sqrt3 = R::from_f64(3.0).sqrt();
    let x = lead.clone() * &u;
    let y = lead * sqrt3 * u * (one - R::from_f64(2.0) * t.clone());
    Point2::new(x, y)
}

/// The defect of a point against the Maclaurin implicit form:
/// `2x(x²+y²) − k(3x²−y²)`, zero exactly on the curve.
pub fn maclaurin_implicit_residual<R: Real>(k: &R, p: &Point2<R>) -> R {
    let x2 = p.x.clone() * &p.x;
    let y2 = p.y.clone() * &p.y;
    let lhs = R::from_f64(2.0) * p.x.clone() * (x2.clone() + &y2);
    let rhs = k.clone() * (R::from_f64(3.0) * x2 - y2);
    lhs - rhs
}

/// The Limaçon trisectrix parametrization
/// `L(t) = 3k/(2(1−(1−t)t)²) · (t(1+t−2(2−t)t²), √3(1−t)t(1−2t))`.
///
/// The denominator `1 − t + t²` is positive everywhere.
pub fn limacon_point<R: Real>(k: &R, t: &R) -> Point2<R> {
    let one = R::one();
    let two = R::from_f64(2.0);
    let u = (one.clone() - t) * t;
    let den = one.clone() - u.clone();
    let lead = R::from_f64(1.5) * k.clone() / (den.clone() * &den);
    let sqrt3 = R::from_f64(3.0).sqrt();
    let x_inner = t.clone()
        * (one.clone() + t - two.clone() * (two.clone() - t) * t.clone() * t);
    let x = lead.clone() * x_inner;
    let y = lead * sqrt3 * u * (one - two * t.clone());
    Point2::new(x, y)
}

/// The defect of a point against the Limaçon implicit form:
/// `k²(x²+y²) − (x²+y²−2kx)²`, zero exactly on the curve.
pub fn limacon_implicit_residual<R: Real>(k: &R, p: &Point2<R>) -> R {
    let r2 = p.x.clone() * &p.x + p.y.clone() * &p.y;
    let inner = r2.clone() - R::from_f64(2.0) * k.clone() * &p.x;
    k.clone() * k * r2 - inner.clone() * &inner
}

type ShapeFn<R> = Arc<dyn Fn(&R) -> R + Send + Sync>;

/// Unsheared shape coordinates `(l_x(t), l_y(t))` of a curve, expressed
/// in a shear frame's axis units. The frame image of the shape at `t`
/// is `origin + l_x(t)·Vx + l_y(t)·Vy`.
#[derive(Clone)]
pub struct ShapeCurve<R> {
    lx: ShapeFn<R>,
    ly: ShapeFn<R>,
}

impl<R: Real> ShapeCurve<R> {
    /// Builds a shape curve from coordinate functions.
    pub fn new<F, G>(lx: F, ly: G) -> Self
    where
        F: Fn(&R) -> R + Send + Sync + 'static,
        G: Fn(&R) -> R + Send + Sync + 'static,
    {
        ShapeCurve {
            lx: Arc::new(lx),
            ly: Arc::new(ly),
        }
    }

    /// The shape coordinates at `t`.
    pub fn eval(&self, t: &R) -> (R, R) {
        ((self.lx)(t), (self.ly)(t))
    }

    /// The Maclaurin shape traced along the aliquot family: with the
    /// curve scale normalized to `k = 1`,
    /// `l_x(t) = M_x(t)` and `l_y(t) = √3·M_y(t)`, so the two frame
    /// anchors `t = 0, 1/3` land on the frame origin and on
    /// `origin + Vx + Vy`.
    pub fn maclaurin() -> Self {
        ShapeCurve::new(
            |t: &R| maclaurin_point(&R::one(), t).x,
            |t: &R| R::from_f64(3.0).sqrt() * maclaurin_point(&R::one(), t).y,
        )
    }

    /// The shape of a general scaling∘aliquot decomposition: the
    /// Maclaurin shape reparametrized by `τ` and scaled by `σ` about
    /// the frame point `(1, 0)` (the centroid's shape coordinates):
    /// `l_x = σ·(M_x∘τ − 1) + 1`, `l_y = √3·σ·(M_y∘τ)`.
    ///
    /// With `σ ≡ 1, τ = id` this is the aliquot (Maclaurin) shape; with
    /// the nedian family's `σ, τ` it reproduces the Limaçon shape away
    /// from the singular parameter.
    pub fn decomposed<S, T>(sigma: S, tau: T) -> Self
    where
        S: Fn(&R) -> R + Send + Sync + Clone + 'static,
        T: Fn(&R) -> R + Send + Sync + Clone + 'static,
    {
        let (sx, tx) = (sigma.clone(), tau.clone());
        ShapeCurve::new(
            move |t: &R| {
                let m = maclaurin_point(&R::one(), &tx(t));
                sx(t) * (m.x - R::one()) + R::one()
            },
            move |t: &R| {
                let m = maclaurin_point(&R::one(), &tau(t));
                R::from_f64(3.0).sqrt() * sigma(t) * m.y
            },
        )
    }
}

/// The Limaçon shape traced along the nedian family, normalized so the
/// frame contract holds for any curve scale `k`:
/// `l_x(t) = L_x(t)/k`, `l_y(t) = √3·L_y(t)/k`. Unlike the composed
/// `σ/τ` form this direct parametrization is defined at the collapse
/// parameter `t = 1/2`, where it evaluates to `(1, 0)` — the frame
/// image of the centroid.
pub fn nedian_shape_curve<R: Real>(k: f64) -> ShapeCurve<R> {
    let k0 = R::from_f64(k);
    let k1 = k0.clone();
    ShapeCurve::new(
        move |t: &R| limacon_point(&k0, t).x / &k0,
        move |t: &R| R::from_f64(3.0).sqrt() * limacon_point(&k1, t).y / &k1,
    )
}
