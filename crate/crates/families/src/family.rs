//! One-parameter triangle families given by generating triples.
//!
//! A family is a triple of functions `(Ψ1(t), Ψ2(t), Ψ3(t))`; at each
//! parameter the vertices of the family triangle are the barycentric
//! rows `[Ψ1:Ψ2:Ψ3]`, `[Ψ3:Ψ1:Ψ2]`, `[Ψ2:Ψ3:Ψ1]` relative to a
//! reference triangle. The triple is projective: any common nonzero
//! scaling describes the same family of triangles.

use std::fmt;
use std::sync::Arc;

use geom_core::{tol, unit_max_normalize3, Real};

use crate::error::FamiliesError;
use crate::polynomial::Polynomial;

/// Default parameter interval on which families are sampled and
/// validated: generously covers the geometrically interesting `[0, 1]`.
pub const DEFAULT_DOMAIN: (f64, f64) = (-2.0, 3.0);

/// Parameters closer than this to a declared pole are excluded from
/// sampling and validity checks.
pub const POLE_EXCLUSION_RADIUS: f64 = 1e-3;

/// Sample count used by construction-time validation.
const VALIDATION_SAMPLES: usize = 512;

/// Minimum normalized spread a family must exhibit somewhere: rules out
/// the degenerate all-components-equal triple, which collapses every
/// triangle to its centroid for all parameters.
const SPREAD_WITNESS: f64 = 1e-9;

type TripleFn<R> = Arc<dyn Fn(&R) -> [R; 3] + Send + Sync>;

#[derive(Clone)]
enum FamilyRepr<R> {
    Polynomial(Box<[Polynomial<R>; 3]>),
    Closure(TripleFn<R>),
}

/// A one-parameter triangle family.
#[derive(Clone)]
pub struct TriangleFamily<R> {
    label: String,
    repr: FamilyRepr<R>,
    domain: (f64, f64),
    poles: Vec<f64>,
}

impl<R: Real> TriangleFamily<R> {
    /// The identity family `(1, 0, 0)`: every family triangle equals
    /// the reference triangle.
    pub fn identity() -> Self {
        Self::polynomial_unchecked(
            "identity",
            [
                Polynomial::from_f64(&[1.0]),
                Polynomial::zero(),
                Polynomial::zero(),
            ],
        )
    }

    /// The scaling family `(1+2t, 1−t, 1−t)`: a homothety about the
    /// centroid with ratio `t`.
    pub fn scaling() -> Self {
        Self::polynomial_unchecked(
            "scaling",
            [
                Polynomial::from_f64(&[1.0, 2.0]),
                Polynomial::from_f64(&[1.0, -1.0]),
                Polynomial::from_f64(&[1.0, -1.0]),
            ],
        )
    }

    /// The aliquot family `(0, 1−t, t)`: each vertex divides the next
    /// side in ratio `t : 1−t`.
    pub fn aliquot() -> Self {
        Self::polynomial_unchecked(
            "aliquot",
            [
                Polynomial::zero(),
                Polynomial::from_f64(&[1.0, -1.0]),
                Polynomial::from_f64(&[0.0, 1.0]),
            ],
        )
    }

    /// The nedian family `((1−t)t, t², (1−t)²)`: vertices cut the
    /// nedian segments; collapses to the centroid at `t = ½`.
    pub fn nedian() -> Self {
        Self::polynomial_unchecked(
            "nedian",
            [
                Polynomial::from_f64(&[0.0, 1.0, -1.0]),
                Polynomial::from_f64(&[0.0, 0.0, 1.0]),
                Polynomial::from_f64(&[1.0, -2.0, 1.0]),
            ],
        )
    }

    /// Looks up a builtin family by label.
    pub fn builtin(label: &str) -> Result<Self, FamiliesError> {
        match label {
            "identity" => Ok(Self::identity()),
            "scaling" => Ok(Self::scaling()),
            "aliquot" => Ok(Self::aliquot()),
            "nedian" => Ok(Self::nedian()),
            other => Err(FamiliesError::UnknownLabel {
                label: other.to_owned(),
            }),
        }
    }

    /// Builds a polynomial family over the default domain, validating
    /// the sampled invariants (finite values, nonvanishing weight sum,
    /// genuine spread somewhere).
    pub fn new_polynomial(
        label: impl Into<String>,
        components: [Polynomial<R>; 3],
    ) -> Result<Self, FamiliesError> {
        Self::new_polynomial_in(label, components, DEFAULT_DOMAIN)
    }

    /// Builds a polynomial family over a custom domain.
    pub fn new_polynomial_in(
        label: impl Into<String>,
        components: [Polynomial<R>; 3],
        domain: (f64, f64),
    ) -> Result<Self, FamiliesError> {
        let family = TriangleFamily {
            label: label.into(),
            repr: FamilyRepr::Polynomial(Box::new(components)),
            domain,
            poles: Vec::new(),
        };
        family.validate()?;
        Ok(family)
    }

    /// Builds a closure-backed family with declared poles, validating
    /// the sampled invariants away from the poles.
    pub fn new_closure<F>(
        label: impl Into<String>,
        f: F,
        domain: (f64, f64),
        poles: Vec<f64>,
    ) -> Result<Self, FamiliesError>
    where
        F: Fn(&R) -> [R; 3] + Send + Sync + 'static,
    {
        let family = TriangleFamily {
            label: label.into(),
            repr: FamilyRepr::Closure(Arc::new(f)),
            domain,
            poles,
        };
        family.validate()?;
        Ok(family)
    }

    /// Internal constructor for algebraically derived families
    /// (builtins, concatenations, inverses) whose validity follows from
    /// the construction.
    pub(crate) fn polynomial_unchecked(
        label: impl Into<String>,
        components: [Polynomial<R>; 3],
    ) -> Self {
        TriangleFamily {
            label: label.into(),
            repr: FamilyRepr::Polynomial(Box::new(components)),
            domain: DEFAULT_DOMAIN,
            poles: Vec::new(),
        }
    }

    /// Internal closure-backed constructor for derived families.
    pub(crate) fn closure_unchecked<F>(label: impl Into<String>, f: F) -> Self
    where
        F: Fn(&R) -> [R; 3] + Send + Sync + 'static,
    {
        TriangleFamily {
            label: label.into(),
            repr: FamilyRepr::Closure(Arc::new(f)),
            domain: DEFAULT_DOMAIN,
            poles: Vec::new(),
        }
    }

    pub(crate) fn with_domain(mut self, domain: (f64, f64)) -> Self {
        self.domain = domain;
        self
    }

    pub(crate) fn with_poles(mut self, poles: Vec<f64>) -> Self {
        self.poles = poles;
        self
    }

    /// The generating triple at `t`.
    pub fn eval(&self, t: &R) -> [R; 3] {
        match &self.repr {
            FamilyRepr::Polynomial(ps) => [ps[0].eval(t), ps[1].eval(t), ps[2].eval(t)],
            FamilyRepr::Closure(f) => f(t),
        }
    }

    /// The generating triple at an `f64` parameter.
    pub fn eval_f64(&self, t: f64) -> [R; 3] {
        self.eval(&R::from_f64(t))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    /// Declared parameter poles (weight-sum zeros).
    pub fn poles(&self) -> &[f64] {
        &self.poles
    }

    /// The polynomial components, when this family has them.
    pub fn polynomials(&self) -> Option<&[Polynomial<R>; 3]> {
        match &self.repr {
            FamilyRepr::Polynomial(ps) => Some(ps),
            FamilyRepr::Closure(_) => None,
        }
    }

    /// True when `t` lies in the domain and outside every pole-exclusion
    /// ball.
    pub fn valid_parameter(&self, t: f64) -> bool {
        let (lo, hi) = self.domain;
        t.is_finite()
            && t >= lo
            && t <= hi
            && self
                .poles
                .iter()
                .all(|p| (t - p).abs() > POLE_EXCLUSION_RADIUS)
    }

    /// `n` valid parameters, uniformly spaced over the domain with
    /// pole-exclusion balls removed.
    pub fn sample_parameters(&self, n: usize) -> Vec<f64> {
        let (lo, hi) = self.domain;
        let n = n.max(2);
        (0..n)
            .map(|i| lo + (hi - lo) * (i as f64) / ((n - 1) as f64))
            .filter(|&t| self.valid_parameter(t))
            .collect()
    }

    /// Serializes a polynomial family as
    /// `label; p1(t); p2(t); p3(t)` with ascending coefficient lists.
    pub fn serialize(&self) -> Result<String, FamiliesError> {
        let ps = self
            .polynomials()
            .ok_or_else(|| FamiliesError::NotPolynomial {
                label: self.label.clone(),
            })?;
        Ok(format!(
            "{}; {}; {}; {}",
            self.label,
            ps[0].serialize(),
            ps[1].serialize(),
            ps[2].serialize()
        ))
    }

    /// Parses the `label; p1(t); p2(t); p3(t)` format produced by
    /// [`TriangleFamily::serialize`], validating the result.
    pub fn parse(text: &str) -> Result<Self, FamiliesError> {
        let parts: Vec<&str> = text.split(';').collect();
        if parts.len() != 4 {
            return Err(FamiliesError::Parse {
                reason: format!(
                    "expected `label; p1; p2; p3` with 4 fields, found {}",
                    parts.len()
                ),
            });
        }
        let label = parts[0].trim();
        if label.is_empty() {
            return Err(FamiliesError::Parse {
                reason: "empty label".to_owned(),
            });
        }
        let components = [
            Polynomial::parse(parts[1])?,
            Polynomial::parse(parts[2])?,
            Polynomial::parse(parts[3])?,
        ];
        Self::new_polynomial(label, components)
    }

    /// Sampled construction-time validation: all values finite, the
    /// weight sum stays away from zero, and at least one sampled
    /// parameter shows genuine spread between the components.
    fn validate(&self) -> Result<(), FamiliesError> {
        let ts = self.sample_parameters(VALIDATION_SAMPLES);
        if ts.is_empty() {
            return Err(self.invalid("domain contains no valid parameters"));
        }
        let mut spread_witness = false;
        for &t in &ts {
            let triple = self.eval_f64(t);
            if triple.iter().any(|v| !v.is_finite()) {
                return Err(self.invalid(&format!("non-finite component at t = {t}")));
            }
            let sum = triple[0].clone() + &triple[1] + &triple[2];
            let max_abs = triple[0]
                .abs()
                .max_of(&triple[1].abs())
                .max_of(&triple[2].abs());
            if !(max_abs > R::zero()) {
                return Err(self.invalid(&format!("all components vanish at t = {t}")));
            }
            let eps = R::from_f64(tol::EPS_PROJ_FACTOR) * max_abs;
            if sum.abs() <= eps {
                return Err(self.invalid(&format!(
                    "weight sum vanishes at t = {t} (undeclared pole)"
                )));
            }
            if !spread_witness && normalized_spread(&triple) > SPREAD_WITNESS {
                spread_witness = true;
            }
        }
        if !spread_witness {
            return Err(self.invalid(
                "all three components coincide at every sampled parameter \
                 (family collapses to the centroid)",
            ));
        }
        Ok(())
    }

    fn invalid(&self, reason: &str) -> FamiliesError {
        FamiliesError::InvalidFamily {
            label: self.label.clone(),
            reason: reason.to_owned(),
        }
    }
}

impl<R: Real> fmt::Debug for TriangleFamily<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("TriangleFamily");
        s.field("label", &self.label)
            .field("domain", &self.domain)
            .field("poles", &self.poles);
        match &self.repr {
            FamilyRepr::Polynomial(ps) => s.field("components", ps),
            FamilyRepr::Closure(_) => s.field("components", &"<closure>"),
        };
        s.finish()
    }
}

/// Largest componentwise difference of the unit-max-normalized triple:
/// zero exactly when all three components are equal.
pub fn normalized_spread<R: Real>(triple: &[R; 3]) -> f64 {
    let n = unit_max_normalize3(triple);
    let mut lo = n[0].clone();
    let mut hi = n[0].clone();
    for v in &n[1..] {
        lo = lo.min_of(v);
        hi = hi.max_of(v);
    }
    (hi - lo).to_f64()
}
