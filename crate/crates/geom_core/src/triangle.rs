//! Validated triangles, the stable Heron area, and canonical placement.

use crate::error::GeomError;
use crate::point::Point2;
use crate::real::Real;
use crate::tol;

/// Side lengths of a nondegenerate triangle.
///
/// The labels follow the opposite-vertex convention: `a = |BC|`,
/// `b = |CA|`, `c = |AB|`. Construction validates positivity, finiteness,
/// and the strict triangle inequality, so a value of this type always
/// describes a genuine triangle shape.
#[derive(Clone, Debug, PartialEq)]
pub struct SideLengths<R> {
    a: R,
    b: R,
    c: R,
}

impl<R: Real> SideLengths<R> {
    /// Validates and stores a side-length triple.
    pub fn new(a: R, b: R, c: R) -> Result<Self, GeomError> {
        let zero = R::zero();
        let all_finite = a.is_finite() && b.is_finite() && c.is_finite();
        if !all_finite || a <= zero || b <= zero || c <= zero {
            return Err(GeomError::NonPositiveSide {
                a: a.to_f64(),
                b: b.to_f64(),
                c: c.to_f64(),
            });
        }
        let strict = a < b.clone() + &c && b < c.clone() + &a && c < a.clone() + &b;
        if !strict {
            return Err(GeomError::TriangleInequality {
                a: a.to_f64(),
                b: b.to_f64(),
                c: c.to_f64(),
            });
        }
        Ok(SideLengths { a, b, c })
    }

    #[inline]
    pub fn a(&self) -> &R {
        &self.a
    }

    #[inline]
    pub fn b(&self) -> &R {
        &self.b
    }

    #[inline]
    pub fn c(&self) -> &R {
        &self.c
    }

    /// The longest of the three sides.
    pub fn longest(&self) -> R {
        self.a.max_of(&self.b).max_of(&self.c)
    }

    /// Degeneracy tolerance for this triangle: a scale-relative area (or
    /// edge-determinant) threshold proportional to the squared longest
    /// side.
    pub fn eps_degenerate(&self) -> R {
        let longest = self.longest();
        R::from_f64(tol::EPS_DEGENERATE_FACTOR) * longest.clone() * &longest
    }

    /// The triple as an array `[a, b, c]`.
    #[inline]
    pub fn as_array(&self) -> [R; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    /// Rounds the sides to `f64` for reporting.
    pub fn to_f64(&self) -> SideLengths<f64> {
        SideLengths {
            a: self.a.to_f64(),
            b: self.b.to_f64(),
            c: self.c.to_f64(),
        }
    }
}

/// Area from side lengths by the numerically stable form of Heron's
/// formula.
///
/// With the sides sorted so that `x ≥ y ≥ z`, the area is
/// `¼·√((x+(y+z))·(z−(x−y))·(z+(x−y))·(x+(y−z)))`, which avoids the
/// catastrophic cancellation of the textbook `s(s−a)(s−b)(s−c)` product
/// for needle-shaped triangles. Returns a degeneracy error if the
/// radicand fails to be strictly positive.
pub fn heron_area<R: Real>(s: &SideLengths<R>) -> Result<R, GeomError> {
    let mut x = s.a().clone();
    let mut y = s.b().clone();
    let mut z = s.c().clone();
    // Sort descending: x >= y >= z.
    if x < y {
        std::mem::swap(&mut x, &mut y);
    }
    if y < z {
        std::mem::swap(&mut y, &mut z);
    }
    if x < y {
        std::mem::swap(&mut x, &mut y);
    }
    let f1 = x.clone() + (y.clone() + &z);
    let f2 = z.clone() - (x.clone() - &y);
    let f3 = z.clone() + (x.clone() - &y);
    let f4 = x.clone() + (y.clone() - &z);
    let radicand = f1 * f2 * f3 * f4;
    if !(radicand > R::zero()) {
        return Err(GeomError::DegenerateTriangle {
            measure: radicand.to_f64(),
            tol: 0.0,
        });
    }
    Ok(radicand.sqrt() * R::from_f64(0.25))
}

/// A triangle given by its three vertices.
///
/// The vertices are named so that side `a` is opposite vertex `A`, and so
/// on. Construction through [`Triangle::new`] enforces finite coordinates
/// and non-collinearity relative to the degeneracy tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangle<R> {
    pub a: Point2<R>,
    pub b: Point2<R>,
    pub c: Point2<R>,
}

impl<R: Real> Triangle<R> {
    /// Validates vertices: all coordinates finite and the edge matrix
    /// determinant above the scale-relative degeneracy tolerance.
    pub fn new(a: Point2<R>, b: Point2<R>, c: Point2<R>) -> Result<Self, GeomError> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeomError::NonFiniteVertex);
        }
        let t = Triangle { a, b, c };
        let det = t.b.sub(&t.a).cross(&t.c.sub(&t.a));
        let longest = t.longest_side();
        let eps = R::from_f64(tol::EPS_DEGENERATE_FACTOR) * longest.clone() * &longest;
        if det.abs() <= eps {
            return Err(GeomError::DegenerateTriangle {
                measure: det.to_f64(),
                tol: eps.to_f64(),
            });
        }
        Ok(t)
    }

    /// Builds a triangle without the non-collinearity check. Intended for
    /// values already known valid (for example from `canonical_placement`)
    /// or for callers that flag degeneracy themselves.
    #[inline]
    pub fn from_vertices_unchecked(a: Point2<R>, b: Point2<R>, c: Point2<R>) -> Self {
        Triangle { a, b, c }
    }

    /// Side lengths `a = |BC|`, `b = |CA|`, `c = |AB|`.
    pub fn side_lengths(&self) -> Result<SideLengths<R>, GeomError> {
        SideLengths::new(
            self.b.dist(&self.c),
            self.c.dist(&self.a),
            self.a.dist(&self.b),
        )
    }

    /// Twice the signed area is the cross product of two edges; this
    /// returns half of it, positive for counterclockwise vertex order.
    pub fn signed_area(&self) -> R {
        self.b.sub(&self.a).cross(&self.c.sub(&self.a)) * R::from_f64(0.5)
    }

    /// Arithmetic mean of the vertices.
    pub fn centroid(&self) -> Point2<R> {
        let three = R::from_f64(3.0);
        Point2::new(
            (self.a.x.clone() + &self.b.x + &self.c.x) / &three,
            (self.a.y.clone() + &self.b.y + &self.c.y) / &three,
        )
    }

    /// Length of the longest side.
    pub fn longest_side(&self) -> R {
        let ab = self.a.dist(&self.b);
        let bc = self.b.dist(&self.c);
        let ca = self.c.dist(&self.a);
        ab.max_of(&bc).max_of(&ca)
    }

    /// Rounds all vertices to `f64` for reporting and plotting.
    pub fn to_f64(&self) -> Triangle<f64> {
        Triangle {
            a: self.a.to_f64(),
            b: self.b.to_f64(),
            c: self.c.to_f64(),
        }
    }
}

/// Places a triangle with the given side lengths so that side `c` lies on
/// the x-axis: `A = (0,0)`, `B = (c,0)`, and
/// `C = ((−a²+b²+c²)/(2c), 2𝒜/c)` with `𝒜` the Heron area, so `C` lies
/// above the axis and the vertex order is counterclockwise.
pub fn canonical_placement<R: Real>(s: &SideLengths<R>) -> Result<Triangle<R>, GeomError> {
    let area = heron_area(s)?;
    let (a, b, c) = (s.a(), s.b(), s.c());
    let two = R::from_f64(2.0);
    let cx = (-(a.clone() * a) + b.clone() * b + c.clone() * c) / (two.clone() * c);
    let cy = two * area / c.clone();
    Ok(Triangle::from_vertices_unchecked(
        Point2::new(R::zero(), R::zero()),
        Point2::new(c.clone(), R::zero()),
        Point2::new(cx, cy),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn sides(a: f64, b: f64, c: f64) -> SideLengths<f64> {
        SideLengths::new(a, b, c).expect("valid side lengths")
    }

    #[test]
    fn side_length_validation_rejects_bad_triples() {
        assert!(matches!(
            SideLengths::new(0.0, 1.0, 1.0),
            Err(GeomError::NonPositiveSide { .. })
        ));
        assert!(matches!(
            SideLengths::new(-1.0, 2.0, 2.0),
            Err(GeomError::NonPositiveSide { .. })
        ));
        assert!(matches!(
            SideLengths::new(f64::NAN, 1.0, 1.0),
            Err(GeomError::NonPositiveSide { .. })
        ));
        assert!(matches!(
            SideLengths::new(3.0, 1.0, 2.0),
            Err(GeomError::TriangleInequality { .. })
        ));
        assert!(matches!(
            SideLengths::new(5.0, 1.0, 1.0),
            Err(GeomError::TriangleInequality { .. })
        ));
        assert!(SideLengths::new(3.0, 4.0, 5.0).is_ok());
    }

    #[test]
    fn heron_area_right_triangle() {
        let area = heron_area(&sides(3.0, 4.0, 5.0)).expect("area");
        assert_relative_eq!(area, 6.0, max_relative = 1e-15);
    }

    #[test]
    fn heron_area_equilateral_unit() {
        let area = heron_area(&sides(1.0, 1.0, 1.0)).expect("area");
        assert_relative_eq!(area, 3f64.sqrt() / 4.0, max_relative = 1e-15);
    }

    #[test]
    fn heron_area_matches_cross_product_area() {
        let s = sides(2.0, 3.0, 4.0);
        let area = heron_area(&s).expect("area");
        let t = canonical_placement(&s).expect("placement");
        let cross = t.b.sub(&t.a).cross(&t.c.sub(&t.a)).abs() * 0.5;
        assert_relative_eq!(area, cross, max_relative = 1e-12);
    }

    #[test]
    fn canonical_placement_345() {
        let t = canonical_placement(&sides(3.0, 4.0, 5.0)).expect("placement");
        assert_eq!(t.a, Point2::new(0.0, 0.0));
        assert_eq!(t.b, Point2::new(5.0, 0.0));
        assert_relative_eq!(t.c.x, 3.2, max_relative = 1e-15);
        assert_relative_eq!(t.c.y, 2.4, max_relative = 1e-15);
        // Sides come back in the right slots.
        assert_relative_eq!(t.c.dist(&t.a), 4.0, max_relative = 1e-15);
        assert_relative_eq!(t.c.dist(&t.b), 3.0, max_relative = 1e-15);
    }

    #[test]
    fn canonical_placement_equilateral_apex() {
        let t = canonical_placement(&sides(1.0, 1.0, 1.0)).expect("placement");
        assert_relative_eq!(t.c.x, 0.5, max_relative = 1e-15);
        assert_relative_eq!(t.c.y, 3f64.sqrt() / 2.0, max_relative = 1e-15);
    }

    #[test]
    fn canonical_placement_round_trips_side_lengths() {
        let s = sides(2.0, 3.0, 4.0);
        let t = canonical_placement(&s).expect("placement");
        let back = t.side_lengths().expect("sides");
        assert_relative_eq!(*back.a(), 2.0, max_relative = 1e-12);
        assert_relative_eq!(*back.b(), 3.0, max_relative = 1e-12);
        assert_relative_eq!(*back.c(), 4.0, max_relative = 1e-12);
    }

    #[test]
    fn canonical_placement_is_counterclockwise() {
        let t = canonical_placement(&sides(2.0, 3.0, 4.0)).expect("placement");
        assert!(t.signed_area() > 0.0);
    }

    #[test]
    fn triangle_new_rejects_collinear_vertices() {
        let r = Triangle::new(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(2.0, 2.0),
        );
        assert!(matches!(r, Err(GeomError::DegenerateTriangle { .. })));
    }

    #[test]
    fn centroid_of_345_placement() {
        let t = canonical_placement(&sides(3.0, 4.0, 5.0)).expect("placement");
        let g = t.centroid();
        assert_relative_eq!(g.x, 41.0 / 15.0, max_relative = 1e-15);
        assert_relative_eq!(g.y, 0.8, max_relative = 1e-15);
    }

    #[test]
    fn works_in_extended_precision() {
        use crate::bigreal::BigReal;
        let s = SideLengths::new(
            BigReal::from_f64(3.0),
            BigReal::from_f64(4.0),
            BigReal::from_f64(5.0),
        )
        .expect("valid side lengths");
        let area = heron_area(&s).expect("area");
        assert!((area - BigReal::from_f64(6.0)).abs() < BigReal::from_f64(1e-70));
        let t = canonical_placement(&s).expect("placement");
        assert!((t.c.x.to_f64() - 3.2).abs() < 1e-15);
        assert!((t.c.y.to_f64() - 2.4).abs() < 1e-15);
    }
}
