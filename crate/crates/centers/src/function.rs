//! Center functions and cyclic coefficient factors as opaque evaluators.

use std::sync::Arc;

use geom_core::{Real, SideLengths};

/// Shared evaluator over side-length triples.
pub type EvalFn<R> = Arc<dyn Fn(&R, &R, &R) -> R + Send + Sync>;

/// What is known about the vanishing behaviour of a function's trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Traceability {
    /// The trace is known to be nowhere zero on nondegenerate shapes.
    KnownYes,
    /// The trace is known to vanish somewhere (typically at equilateral
    /// shapes).
    KnownNo,
    /// Nothing is known; sampled reports can upgrade this.
    Unknown,
}

/// A triangle center function `ψ(a, b, c)`.
///
/// The invariants expected of an evaluator are homogeneity of the stated
/// degree, `ψ(t·a, t·b, t·c) = t^r·ψ(a, b, c)`, and symmetry in the last
/// two arguments, `ψ(a, b, c) = ψ(a, c, b)`. They are validated by
/// sampling (see `validate_center_invariants`), not enforced at
/// construction, because evaluators are opaque.
#[derive(Clone)]
pub struct CenterFunction<R> {
    id: Option<String>,
    formula: Option<String>,
    eval: EvalFn<R>,
    degree: Option<i32>,
    traceable: Traceability,
}

impl<R: Real> CenterFunction<R> {
    /// Builds a center function from an evaluator and metadata.
    pub fn new(
        id: Option<&str>,
        formula: Option<&str>,
        degree: Option<i32>,
        traceable: Traceability,
        eval: EvalFn<R>,
    ) -> Self {
        CenterFunction {
            id: id.map(str::to_owned),
            formula: formula.map(str::to_owned),
            eval,
            degree,
            traceable,
        }
    }

    /// Convenience constructor for anonymous functions of known degree.
    pub fn from_fn<F>(degree: Option<i32>, f: F) -> Self
    where
        F: Fn(&R, &R, &R) -> R + Send + Sync + 'static,
    {
        Self::new(None, None, degree, Traceability::Unknown, Arc::new(f))
    }

    /// Catalog label, if any.
    pub fn id(&self) -> Option<&str> {
        self.id.as_deref()
    }

    /// Human-readable side-length formula, if any.
    pub fn formula(&self) -> Option<&str> {
        self.formula.as_deref()
    }

    /// Homogeneity degree, if known.
    pub fn degree(&self) -> Option<i32> {
        self.degree
    }

    /// Traceability status.
    pub fn traceable(&self) -> Traceability {
        self.traceable
    }

    /// Returns a copy with a different label.
    pub fn with_id(mut self, id: &str) -> Self {
        self.id = Some(id.to_owned());
        self
    }

    /// Returns a copy with a different traceability marker.
    pub fn with_traceability(mut self, t: Traceability) -> Self {
        self.traceable = t;
        self
    }

    /// Evaluates `ψ(a, b, c)`.
    #[inline]
    pub fn eval(&self, a: &R, b: &R, c: &R) -> R {
        (self.eval)(a, b, c)
    }

    /// The three cyclic evaluations
    /// `[ψ(a,b,c), ψ(b,c,a), ψ(c,a,b)]` at the given side lengths.
    pub fn cyclic_triple(&self, s: &SideLengths<R>) -> [R; 3] {
        let (a, b, c) = (s.a(), s.b(), s.c());
        [self.eval(a, b, c), self.eval(b, c, a), self.eval(c, a, b)]
    }

    /// Shares the underlying evaluator.
    pub fn eval_fn(&self) -> EvalFn<R> {
        Arc::clone(&self.eval)
    }
}

impl<R> std::fmt::Debug for CenterFunction<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CenterFunction")
            .field("id", &self.id)
            .field("formula", &self.formula)
            .field("degree", &self.degree)
            .field("traceable", &self.traceable)
            .finish_non_exhaustive()
    }
}

/// A cyclic coefficient factor `ω(a, b, c)`.
///
/// Cyclic means `ω(a, b, c) = ω(b, c, a)`; such factors multiply center
/// functions without disturbing the trilinear triple's structure. The
/// cyclicity of user-supplied factors is a sampled semi-decision, as is
/// their required nonvanishing.
#[derive(Clone)]
pub struct CyclicFactor<R> {
    eval: EvalFn<R>,
    degree: Option<i32>,
}

impl<R: Real> CyclicFactor<R> {
    pub fn new(degree: Option<i32>, eval: EvalFn<R>) -> Self {
        CyclicFactor { eval, degree }
    }

    /// Convenience constructor from a closure.
    pub fn from_fn<F>(degree: Option<i32>, f: F) -> Self
    where
        F: Fn(&R, &R, &R) -> R + Send + Sync + 'static,
    {
        CyclicFactor {
            eval: Arc::new(f),
            degree,
        }
    }

    /// A constant factor.
    pub fn constant(value: R) -> Self {
        let v = value.clone();
        CyclicFactor {
            eval: Arc::new(move |_: &R, _: &R, _: &R| v.clone()),
            degree: Some(0),
        }
    }

    /// Homogeneity degree, if known.
    pub fn degree(&self) -> Option<i32> {
        self.degree
    }

    #[inline]
    pub fn eval(&self, a: &R, b: &R, c: &R) -> R {
        (self.eval)(a, b, c)
    }

    /// Shares the underlying evaluator.
    pub fn eval_fn(&self) -> EvalFn<R> {
        Arc::clone(&self.eval)
    }
}

impl<R> std::fmt::Debug for CyclicFactor<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CyclicFactor")
            .field("degree", &self.degree)
            .finish_non_exhaustive()
    }
}
