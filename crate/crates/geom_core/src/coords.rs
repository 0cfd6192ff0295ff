//! Homogeneous barycentric and trilinear coordinates.

use crate::error::GeomError;
use crate::point::Point2;
use crate::real::Real;
use crate::tol;
use crate::triangle::{SideLengths, Triangle};

/// Homogeneous barycentric weights `[λ1 : λ2 : λ3]` relative to a
/// triangle's vertices `A`, `B`, `C`.
///
/// A triple describes a projective point, so any nonzero scalar multiple
/// is the same point; comparisons should go through
/// [`unit_max_normalize3`] or [`proportionality_residual3`]. A triple is
/// considered normalized when its sum is within [`tol::EPS_NORM`] of 1,
/// see [`Barycentric::is_normalized`].
#[derive(Clone, Debug, PartialEq)]
pub struct Barycentric<R> {
    pub l1: R,
    pub l2: R,
    pub l3: R,
}

/// Homogeneous trilinear coordinates `[x1 : x2 : x3]`: signed distances to
/// the sides opposite `A`, `B`, `C`, up to a common scale.
#[derive(Clone, Debug, PartialEq)]
pub struct Trilinear<R> {
    pub x1: R,
    pub x2: R,
    pub x3: R,
}

impl<R: Real> Barycentric<R> {
    #[inline]
    pub fn new(l1: R, l2: R, l3: R) -> Self {
        Barycentric { l1, l2, l3 }
    }

    #[inline]
    pub fn as_array(&self) -> [R; 3] {
        [self.l1.clone(), self.l2.clone(), self.l3.clone()]
    }

    #[inline]
    pub fn from_array(v: [R; 3]) -> Self {
        let [l1, l2, l3] = v;
        Barycentric { l1, l2, l3 }
    }

    /// Sum of the homogeneous weights.
    #[inline]
    pub fn sum(&self) -> R {
        self.l1.clone() + &self.l2 + &self.l3
    }

    /// Largest component magnitude.
    pub fn max_abs(&self) -> R {
        self.l1.abs().max_of(&self.l2.abs()).max_of(&self.l3.abs())
    }

    /// Divides by the weight sum so the components add to 1. Fails when
    /// the sum is within the projective tolerance of zero (a point at
    /// infinity).
    pub fn normalize(&self) -> Result<Self, GeomError> {
        let sum = self.sum();
        let eps = R::from_f64(tol::EPS_PROJ_FACTOR) * self.max_abs();
        if sum.abs() <= eps {
            return Err(GeomError::PointAtInfinity {
                sum: sum.to_f64(),
                tol: eps.to_f64(),
            });
        }
        Ok(Barycentric {
            l1: self.l1.clone() / &sum,
            l2: self.l2.clone() / &sum,
            l3: self.l3.clone() / &sum,
        })
    }

    /// True when the weight sum is within [`tol::EPS_NORM`] of 1.
    pub fn is_normalized(&self) -> bool {
        (self.sum() - R::one()).abs() <= R::from_f64(tol::EPS_NORM)
    }
}

impl<R: Real> Trilinear<R> {
    #[inline]
    pub fn new(x1: R, x2: R, x3: R) -> Self {
        Trilinear { x1, x2, x3 }
    }

    #[inline]
    pub fn as_array(&self) -> [R; 3] {
        [self.x1.clone(), self.x2.clone(), self.x3.clone()]
    }

    #[inline]
    pub fn from_array(v: [R; 3]) -> Self {
        let [x1, x2, x3] = v;
        Trilinear { x1, x2, x3 }
    }

    /// Largest component magnitude.
    pub fn max_abs(&self) -> R {
        self.x1.abs().max_of(&self.x2.abs()).max_of(&self.x3.abs())
    }
}

impl<R: Real> From<[R; 3]> for Barycentric<R> {
    fn from(v: [R; 3]) -> Self {
        Barycentric::from_array(v)
    }
}

impl<R: Real> From<[R; 3]> for Trilinear<R> {
    fn from(v: [R; 3]) -> Self {
        Trilinear::from_array(v)
    }
}

/// Divides a homogeneous triple by its (signed) component of largest
/// magnitude, so that component becomes exactly 1.
///
/// This is the canonical representative used for projective comparisons:
/// two triples are proportional exactly when their normalized forms agree
/// componentwise, regardless of scale or overall sign. A zero triple is
/// returned unchanged.
pub fn unit_max_normalize3<R: Real>(v: &[R; 3]) -> [R; 3] {
    let mut idx = 0;
    let mut best = v[0].abs();
    for (i, item) in v.iter().enumerate().skip(1) {
        let mag = item.abs();
        if mag > best {
            best = mag;
            idx = i;
        }
    }
    if !(best > R::zero()) {
        return v.clone();
    }
    let pivot = v[idx].clone();
    [
        v[0].clone() / &pivot,
        v[1].clone() / &pivot,
        v[2].clone() / &pivot,
    ]
}

/// Largest componentwise difference between the canonical representatives
/// of two homogeneous triples: zero exactly when the triples are
/// proportional (with either sign).
pub fn proportionality_residual3<R: Real>(u: &[R; 3], v: &[R; 3]) -> R {
    let un = unit_max_normalize3(u);
    let vn = unit_max_normalize3(v);
    let mut worst = R::zero();
    for i in 0..3 {
        let d = (un[i].clone() - &vn[i]).abs();
        worst = worst.max_of(&d);
    }
    worst
}

/// Cartesian position of a barycentric point:
/// `(λ1·A + λ2·B + λ3·C) / (λ1 + λ2 + λ3)`.
///
/// Fails with a projective error when the weight sum is within
/// [`tol::EPS_PROJ_FACTOR`] times the largest weight magnitude of zero.
pub fn bary_to_point<R: Real>(
    t: &Triangle<R>,
    b: &Barycentric<R>,
) -> Result<Point2<R>, GeomError> {
    let n = b.normalize()?;
    Ok(Point2::new(
        n.l1.clone() * &t.a.x + n.l2.clone() * &t.b.x + n.l3.clone() * &t.c.x,
        n.l1 * &t.a.y + n.l2 * &t.b.y + n.l3 * &t.c.y,
    ))
}

/// Converts homogeneous trilinears to homogeneous barycentrics by
/// multiplying each coordinate with the corresponding side length:
/// `[x1 : x2 : x3] ↦ [a·x1 : b·x2 : c·x3]`.
pub fn trilinear_to_bary<R: Real>(s: &SideLengths<R>, t: &Trilinear<R>) -> Barycentric<R> {
    Barycentric::new(
        s.a().clone() * &t.x1,
        s.b().clone() * &t.x2,
        s.c().clone() * &t.x3,
    )
}

/// Determinant of the 3×3 matrix whose columns are the three homogeneous
/// triples, each column first divided by its component of largest
/// magnitude. The result is zero exactly when the three projective points
/// are collinear; columns that are identically zero are left unscaled
/// (and force a zero determinant).
pub fn collinearity_residual<R: Real>(
    p: &Barycentric<R>,
    q: &Barycentric<R>,
    r: &Barycentric<R>,
) -> R {
    let c1 = unit_max_normalize3(&p.as_array());
    let c2 = unit_max_normalize3(&q.as_array());
    let c3 = unit_max_normalize3(&r.as_array());
    det3(&c1, &c2, &c3)
}

/// Determinant of the matrix with the given columns.
fn det3<R: Real>(c1: &[R; 3], c2: &[R; 3], c3: &[R; 3]) -> R {
    c1[0].clone() * (c2[1].clone() * &c3[2] - c2[2].clone() * &c3[1])
        - c2[0].clone() * (c1[1].clone() * &c3[2] - c1[2].clone() * &c3[1])
        + c3[0].clone() * (c1[1].clone() * &c2[2] - c1[2].clone() * &c2[1])
}
