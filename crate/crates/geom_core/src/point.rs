//! Cartesian points and vectors over a generic scalar.

use crate::real::Real;

/// A point in the Euclidean plane.
#[derive(Clone, Debug, PartialEq)]
pub struct Point2<R> {
    pub x: R,
    pub y: R,
}

/// A displacement in the Euclidean plane.
#[derive(Clone, Debug, PartialEq)]
pub struct Vec2<R> {
    pub x: R,
    pub y: R,
}

impl<R: Real> Point2<R> {
    #[inline]
    pub fn new(x: R, y: R) -> Self {
        Point2 { x, y }
    }

    /// Displacement from `other` to `self`.
    #[inline]
    pub fn sub(&self, other: &Self) -> Vec2<R> {
        Vec2 {
            x: self.x.clone() - &other.x,
            y: self.y.clone() - &other.y,
        }
    }

    /// The point reached from `self` by `v`.
    #[inline]
    pub fn translate(&self, v: &Vec2<R>) -> Self {
        Point2 {
            x: self.x.clone() + &v.x,
            y: self.y.clone() + &v.y,
        }
    }

    /// Euclidean distance to `other`.
    #[inline]
    pub fn dist(&self, other: &Self) -> R {
        self.sub(other).norm()
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Rounds both components to `f64` for reporting and plotting.
    #[inline]
    pub fn to_f64(&self) -> Point2<f64> {
        Point2 {
            x: self.x.to_f64(),
            y: self.y.to_f64(),
        }
    }
}

impl<R: Real> Vec2<R> {
    #[inline]
    pub fn new(x: R, y: R) -> Self {
        Vec2 { x, y }
    }

    #[inline]
    pub fn add(&self, other: &Self) -> Self {
        Vec2 {
            x: self.x.clone() + &other.x,
            y: self.y.clone() + &other.y,
        }
    }

    #[inline]
    pub fn sub(&self, other: &Self) -> Self {
        Vec2 {
            x: self.x.clone() - &other.x,
            y: self.y.clone() - &other.y,
        }
    }

    #[inline]
    pub fn scale(&self, s: &R) -> Self {
        Vec2 {
            x: self.x.clone() * s,
            y: self.y.clone() * s,
        }
    }

    #[inline]
    pub fn neg(&self) -> Self {
        Vec2 {
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }

    /// Dot product.
    #[inline]
    pub fn dot(&self, other: &Self) -> R {
        self.x.clone() * &other.x + self.y.clone() * &other.y
    }

    /// Z component of the cross product; twice the signed area of the
    /// triangle spanned with `other`.
    #[inline]
    pub fn cross(&self, other: &Self) -> R {
        self.x.clone() * &other.y - self.y.clone() * &other.x
    }

    #[inline]
    pub fn norm_sq(&self) -> R {
        self.dot(self)
    }

    #[inline]
    pub fn norm(&self) -> R {
        self.norm_sq().sqrt()
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Rounds both components to `f64` for reporting and plotting.
    #[inline]
    pub fn to_f64(&self) -> Vec2<f64> {
        Vec2 {
            x: self.x.to_f64(),
            y: self.y.to_f64(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_algebra_identities() {
        let p = Point2::new(3.0, 4.0);
        let q = Point2::new(1.0, 1.0);
        let v = p.sub(&q);
        assert_eq!(v, Vec2::new(2.0, 3.0));
        assert_eq!(q.translate(&v), p);
        assert_eq!(v.dot(&v), v.norm_sq());
        assert_eq!(v.cross(&v), 0.0);
        assert_eq!(v.cross(&Vec2::new(-3.0, 2.0)), 13.0);
        assert_eq!(v.scale(&2.0), Vec2::new(4.0, 6.0));
        assert_eq!(v.neg().add(&v), Vec2::new(0.0, 0.0));
    }

    #[test]
    fn distance_is_symmetric_and_pythagorean() {
        let p = Point2::new(0.0, 0.0);
        let q = Point2::new(3.0, 4.0);
        assert_eq!(p.dist(&q), 5.0);
        assert_eq!(q.dist(&p), 5.0);
    }
}
