//! Named catalog of triangle center functions.
//!
//! Entries are stored in polynomial or radical side-length form rather
//! than trigonometric form, so no angles are ever computed. The quantity
//! `4𝒜 = √((a+b+c)(−a+b+c)(a−b+c)(a+b−c))` (four times the triangle
//! area) appears in several formulas; it is symmetric in the sides and
//! therefore safe inside cyclic evaluation.
//!
//! Labels follow the Kimberling numbering: X1 incenter, X2 centroid,
//! X3 circumcenter, X6 symmedian point, X11 Feuerbach point, X13/X14
//! first and second isogonic points, X15/X16 first and second isodynamic
//! points, and X32, X39, X50, X52, X58, X61, X62, X63 further centers on
//! or related to the Brocard axis.

use std::collections::BTreeMap;
use std::sync::Arc;

use geom_core::Real;

use crate::function::{CenterFunction, Traceability};

/// Four times the area of the triangle with sides `(a, b, c)`, as a
/// symmetric radical in the side lengths.
pub fn four_area<R: Real>(a: &R, b: &R, c: &R) -> R {
    let p1 = a.clone() + b + c;
    let p2 = -a.clone() + b + c;
    let p3 = a.clone() - b + c;
    let p4 = a.clone() + b - c;
    (p1 * p2 * p3 * p4).sqrt()
}

/// `−a² + b² + c²`, the recurring circumcenter kernel.
fn ck<R: Real>(a: &R, b: &R, c: &R) -> R {
    -(a.clone() * a) + b.clone() * b + c.clone() * c
}

fn sq<R: Real>(x: &R) -> R {
    x.clone() * x
}

/// A catalog entry: the function plus its display metadata.
#[derive(Clone, Debug)]
pub struct CatalogEntry<R> {
    pub label: String,
    pub function: CenterFunction<R>,
}

/// Ordered, read-only collection of the named center functions.
#[derive(Clone, Debug)]
pub struct CenterCatalog<R> {
    entries: BTreeMap<String, CenterFunction<R>>,
    order: Vec<String>,
}

impl<R: Real> CenterCatalog<R> {
    /// Looks up a center by label, e.g. `"X13"`.
    pub fn get(&self, label: &str) -> Option<&CenterFunction<R>> {
        self.entries.get(label)
    }

    /// Labels in numeric order.
    pub fn labels(&self) -> &[String] {
        &self.order
    }

    /// Entries in numeric order.
    pub fn iter(&self) -> impl Iterator<Item = CatalogEntry<R>> + '_ {
        self.order.iter().map(|label| CatalogEntry {
            label: label.clone(),
            function: self.entries[label].clone(),
        })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

macro_rules! entry {
    ($map:ident, $order:ident, $label:literal, $formula:literal, $degree:expr, $traceable:expr, $eval:expr) => {{
        let f = CenterFunction::new(
            Some($label),
            Some($formula),
            Some($degree),
            $traceable,
            Arc::new($eval),
        );
        $map.insert($label.to_owned(), f);
        $order.push($label.to_owned());
    }};
}

/// Builds the catalog of named center functions for the scalar type `R`.
pub fn catalog<R: Real>() -> CenterCatalog<R> {
    use Traceability::{KnownNo, KnownYes};

    let mut map: BTreeMap<String, CenterFunction<R>> = BTreeMap::new();
    let mut order: Vec<String> = Vec::new();

    entry!(map, order, "X1", "1", 0, KnownYes, |_a: &R, _b: &R, _c: &R| {
        R::one()
    });

    entry!(map, order, "X2", "1/a", -1, KnownYes, |a: &R, _b: &R, _c: &R| {
        a.recip()
    });

    entry!(
        map,
        order,
        "X3",
        "a(-a^2+b^2+c^2)",
        3,
        KnownYes,
        |a: &R, b: &R, c: &R| a.clone() * ck(a, b, c)
    );

    entry!(map, order, "X6", "a", 1, KnownYes, |a: &R, _b: &R, _c: &R| {
        a.clone()
    });

    entry!(
        map,
        order,
        "X11",
        "bc(-a+b+c)(b-c)^2",
        5,
        KnownNo,
        |a: &R, b: &R, c: &R| {
            let d = b.clone() - c;
            b.clone() * c * (-a.clone() + b + c) * sq(&d)
        }
    );

    // Individual slots of 1/phi15 blow up when one angle equals 120°, but
    // never all three at once, so the point (and its nonvanishing trace)
    // survives everywhere; downstream evaluation flags those shapes as
    // poles of the evaluator rather than of the center.
    entry!(
        map,
        order,
        "X13",
        "1/(a(sqrt(3)(-a^2+b^2+c^2)+4A))",
        -3,
        KnownYes,
        |a: &R, b: &R, c: &R| phi15(a, b, c).recip()
    );

    // All three cyclic slots of 1/phi16 blow up at the equilateral shape
    // (phi16(a,a,a) = 0 exactly), so the second isogonic point has no
    // finite position there and the trace is undefined; away from that
    // shape the sampled trace stays bounded away from zero (min ~0.067).
    entry!(
        map,
        order,
        "X14",
        "1/(a(sqrt(3)(-a^2+b^2+c^2)-4A))",
        -3,
        KnownNo,
        |a: &R, b: &R, c: &R| phi16(a, b, c).recip()
    );

    entry!(
        map,
        order,
        "X15",
        "a(sqrt(3)(-a^2+b^2+c^2)+4A)",
        3,
        KnownYes,
        phi15
    );

    // The trace is 4A·(4·sqrt(3)·A − (a^2+b^2+c^2)) with A the area,
    // which by the Weitzenboeck inequality is strictly negative except at
    // the equilateral shape, where it vanishes exactly (all three
    // trilinears are zero there, so the second isodynamic point
    // degenerates).
    entry!(
        map,
        order,
        "X16",
        "a(sqrt(3)(-a^2+b^2+c^2)-4A)",
        3,
        KnownNo,
        phi16
    );

    entry!(map, order, "X32", "2a^3", 3, KnownYes, |a: &R, _b: &R, _c: &R| {
        R::from_f64(2.0) * a.clone() * a * a
    });

    entry!(
        map,
        order,
        "X39",
        "2a(b^2+c^2)",
        3,
        KnownYes,
        |a: &R, b: &R, c: &R| R::from_f64(2.0) * a.clone() * (b.clone() * b + c.clone() * c)
    );

    // The trace of this function vanishes along a curve through the
    // equilateral shape (sampled sign change), so it is not traceable.
    entry!(
        map,
        order,
        "X50",
        "2a^3(a^4+b^4+c^4-2a^2(b^2+c^2)+b^2c^2)",
        7,
        KnownNo,
        |a: &R, b: &R, c: &R| {
            let (a2, b2, c2) = (sq(a), sq(b), sq(c));
            let quartic = sq(&a2) + sq(&b2) + sq(&c2)
                - R::from_f64(2.0) * a2.clone() * (b2.clone() + &c2)
                + b2 * c2;
            R::from_f64(2.0) * a.clone() * a * a * quartic
        }
    );

    entry!(
        map,
        order,
        "X52",
        "2a(a^4+b^4+c^4-2a^2(b^2+c^2))((b^2-c^2)^2-a^2(b^2+c^2))",
        9,
        KnownYes,
        |a: &R, b: &R, c: &R| {
            let (a2, b2, c2) = (sq(a), sq(b), sq(c));
            let quartic =
                sq(&a2) + sq(&b2) + sq(&c2) - R::from_f64(2.0) * a2.clone() * (b2.clone() + &c2);
            let second = sq(&(b2.clone() - &c2)) - a2 * (b2 + c2);
            R::from_f64(2.0) * a.clone() * quartic * second
        }
    );

    entry!(
        map,
        order,
        "X58",
        "2a(a+b)(a+c)",
        3,
        KnownYes,
        |a: &R, b: &R, c: &R| {
            R::from_f64(2.0) * a.clone() * (a.clone() + b) * (a.clone() + c)
        }
    );

    entry!(
        map,
        order,
        "X61",
        "a(-a^2+b^2+c^2+4*sqrt(3)*A)",
        3,
        KnownYes,
        |a: &R, b: &R, c: &R| {
            a.clone() * (ck(a, b, c) + R::from_f64(3.0).sqrt() * four_area(a, b, c))
        }
    );

    entry!(
        map,
        order,
        "X62",
        "a(-a^2+b^2+c^2-4*sqrt(3)*A)",
        3,
        KnownYes,
        |a: &R, b: &R, c: &R| {
            a.clone() * (ck(a, b, c) - R::from_f64(3.0).sqrt() * four_area(a, b, c))
        }
    );

    entry!(map, order, "X63", "-a^2+b^2+c^2", 2, KnownYes, ck);

    CenterCatalog {
        entries: map,
        order,
    }
}

/// First isodynamic generating function
/// `a(√3(−a²+b²+c²) + 4𝒜)`.
fn phi15<R: Real>(a: &R, b: &R, c: &R) -> R {
    a.clone() * (R::from_f64(3.0).sqrt() * ck(a, b, c) + four_area(a, b, c))
}

/// Second isodynamic generating function
/// `a(√3(−a²+b²+c²) − 4𝒜)`.
fn phi16<R: Real>(a: &R, b: &R, c: &R) -> R {
    a.clone() * (R::from_f64(3.0).sqrt() * ck(a, b, c) - four_area(a, b, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn catalog_has_expected_labels_in_numeric_order() {
        let cat = catalog::<f64>();
        let labels: Vec<&str> = cat.labels().iter().map(String::as_str).collect();
        assert_eq!(
            labels,
            [
                "X1", "X2", "X3", "X6", "X11", "X13", "X14", "X15", "X16", "X32", "X39", "X50",
                "X52", "X58", "X61", "X62", "X63"
            ]
        );
        assert_eq!(cat.len(), 17);
    }

    #[test]
    fn four_area_matches_heron_on_345() {
        assert_relative_eq!(four_area(&3.0, &4.0, &5.0), 24.0, max_relative = 1e-15);
        // Symmetric under any permutation.
        assert_relative_eq!(four_area(&4.0, &5.0, &3.0), 24.0, max_relative = 1e-15);
        assert_relative_eq!(four_area(&5.0, &3.0, &4.0), 24.0, max_relative = 1e-15);
    }

    #[test]
    fn sample_catalog_values() {
        let cat = catalog::<f64>();
        // φ3 at (2,3,4): 2(-4+9+16) = 42.
        assert_relative_eq!(cat.get("X3").unwrap().eval(&2.0, &3.0, &4.0), 42.0);
        // φ32 at (2,3,4): 2·8 = 16.
        assert_relative_eq!(cat.get("X32").unwrap().eval(&2.0, &3.0, &4.0), 16.0);
        // φ39 at (2,3,4): 2·2·25 = 100.
        assert_relative_eq!(cat.get("X39").unwrap().eval(&2.0, &3.0, &4.0), 100.0);
        // φ50 at (2,3,4): 16·297 = 4752.
        assert_relative_eq!(cat.get("X50").unwrap().eval(&2.0, &3.0, &4.0), 4752.0);
        // φ52 at (2,3,4): 4·153·(−51) = −31212.
        assert_relative_eq!(cat.get("X52").unwrap().eval(&2.0, &3.0, &4.0), -31212.0);
        // φ58 at (2,3,4): 2·2·5·6 = 120.
        assert_relative_eq!(cat.get("X58").unwrap().eval(&2.0, &3.0, &4.0), 120.0);
        // φ63 at (2,3,4): −4+9+16 = 21.
        assert_relative_eq!(cat.get("X63").unwrap().eval(&2.0, &3.0, &4.0), 21.0);
        // φ15 at (5,3,4) (rotated slot of (3,4,5)): 5·(0 + 24) = 120.
        assert_relative_eq!(cat.get("X15").unwrap().eval(&5.0, &3.0, &4.0), 120.0);
    }

    #[test]
    fn feuerbach_function_vanishes_for_isoceles_bc() {
        let cat = catalog::<f64>();
        let x11 = cat.get("X11").unwrap();
        assert_eq!(x11.eval(&1.5, &1.0, &1.0), 0.0);
        assert!(x11.eval(&1.5, &1.0, &1.2) != 0.0);
    }
}
