//! Brocard-axis pencils: the Γ pencil through the circumcenter, the
//! symmedian point and the isodynamic pair, the Ξ pencil through the
//! Brocard midpoint row, and their isogonal-conjugate pencils.

use std::fmt;
use std::sync::Arc;

use centers::{
    brocard_rows, catalog, isogonal_conjugate, scaled_center, CenterFunction, Traceability,
};
use geom_core::Real;

use crate::error::CurvesError;

/// Which pencil a parameter pair selects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaKind {
    /// Isodynamic-axis pencil: base row of the first isodynamic point.
    Gamma,
    /// Brocard-median pencil: base row of the third power point.
    Xi,
    /// Isogonal conjugates of the Γ pencil (isogonic points live here).
    GammaInverse,
    /// Isogonal conjugates of the Ξ pencil.
    XiInverse,
}

impl OmegaKind {
    pub fn token(self) -> &'static str {
        match self {
            OmegaKind::Gamma => "gamma",
            OmegaKind::Xi => "xi",
            OmegaKind::GammaInverse => "gamma_inv",
            OmegaKind::XiInverse => "xi_inv",
        }
    }

    fn from_token(token: &str) -> Option<Self> {
        match token {
            "gamma" => Some(OmegaKind::Gamma),
            "xi" => Some(OmegaKind::Xi),
            "gamma_inv" => Some(OmegaKind::GammaInverse),
            "xi_inv" => Some(OmegaKind::XiInverse),
            _ => None,
        }
    }

    fn base_row_label(self) -> &'static str {
        match self {
            OmegaKind::Gamma | OmegaKind::GammaInverse => "X15",
            OmegaKind::Xi | OmegaKind::XiInverse => "X32",
        }
    }

    fn is_inverse(self) -> bool {
        matches!(self, OmegaKind::GammaInverse | OmegaKind::XiInverse)
    }
}

impl fmt::Display for OmegaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A pencil member `λ0·(ω3·φ3) + λ1·(ω6·φ6)` over the base row of the
/// pencil, optionally isogonally conjugated and pulled toward the
/// centroid by `sigma`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OmegaSpec {
    pub kind: OmegaKind,
    pub lambda0: f64,
    pub lambda1: f64,
    pub sigma: f64,
}

impl OmegaSpec {
    pub fn new(kind: OmegaKind, lambda0: f64, lambda1: f64) -> Result<Self, CurvesError> {
        if !lambda0.is_finite() || !lambda1.is_finite() {
            return Err(CurvesError::InvalidOmegaSpec {
                text: format!("{kind}:{lambda0}:{lambda1}"),
                reason: "coefficients must be finite".to_owned(),
            });
        }
        if lambda0 == 0.0 && lambda1 == 0.0 {
            return Err(CurvesError::ZeroOmegaCoefficients);
        }
        Ok(OmegaSpec {
            kind,
            lambda0,
            lambda1,
            sigma: 0.0,
        })
    }

    pub fn with_sigma(mut self, sigma: f64) -> Self {
        self.sigma = sigma;
        self
    }

    /// Parses `kind:λ0:λ1` or `kind:λ0:λ1:σ` with kind one of
    /// `gamma`, `xi`, `gamma_inv`, `xi_inv`.
    pub fn parse(text: &str) -> Result<Self, CurvesError> {
        let bad = |reason: &str| CurvesError::InvalidOmegaSpec {
            text: text.to_owned(),
            reason: reason.to_owned(),
        };
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 && parts.len() != 4 {
            return Err(bad("expected kind:lambda0:lambda1 with optional :sigma"));
        }
        let kind = OmegaKind::from_token(parts[0].trim()).ok_or_else(|| {
            bad("unknown pencil kind (expected gamma, xi, gamma_inv or xi_inv)")
        })?;
        let number = |s: &str, what: &str| -> Result<f64, CurvesError> {
            s.trim()
                .parse::<f64>()
                .map_err(|_| bad(&format!("{what} is not a number: {s:?}")))
        };
        let lambda0 = number(parts[1], "lambda0")?;
        let lambda1 = number(parts[2], "lambda1")?;
        let mut spec = OmegaSpec::new(kind, lambda0, lambda1)?;
        if parts.len() == 4 {
            let sigma = number(parts[3], "sigma")?;
            if !sigma.is_finite() {
                return Err(bad("sigma must be finite"));
            }
            spec = spec.with_sigma(sigma);
        }
        Ok(spec)
    }
}

impl fmt::Display for OmegaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.kind, self.lambda0, self.lambda1)?;
        if self.sigma != 0.0 {
            write!(f, ":{}", self.sigma)?;
        }
        Ok(())
    }
}

/// The four pencil members invariant under isogonal conjugation of the
/// pencils themselves: the isodynamic pair and the isogonic pair.
pub fn omega_inv_specs() -> Vec<(&'static str, OmegaSpec)> {
    let gamma = |l0: f64, l1: f64| OmegaSpec::new(OmegaKind::Gamma, l0, l1).expect("nonzero");
    let gamma_inv =
        |l0: f64, l1: f64| OmegaSpec::new(OmegaKind::GammaInverse, l0, l1).expect("nonzero");
    vec![
        ("X15", gamma(1.0, 1.0)),
        ("X16", gamma(-1.0, 1.0)),
        ("X13", gamma_inv(1.0, 1.0)),
        ("X14", gamma_inv(-1.0, 1.0)),
    ]
}

/// Builds the center function selected by a pencil spec.
pub fn omega_center<R: Real>(spec: &OmegaSpec) -> Result<CenterFunction<R>, CurvesError> {
    let label = spec.to_string();
    let rows = brocard_rows::<R>();
    let row = rows
        .iter()
        .find(|row| row.label == spec.kind.base_row_label())
        .expect("base row is present in the Brocard table");
    let w3 = row.omega3.eval_fn();
    let w6 = row.omega6.eval_fn();
    let cat = catalog::<R>();
    let f3 = cat.get("X3").expect("circumcenter in catalog").eval_fn();
    let f6 = cat.get("X6").expect("symmedian point in catalog").eval_fn();
    let l0 = R::from_f64(spec.lambda0);
    let l1 = R::from_f64(spec.lambda1);
    let eval = move |a: &R, b: &R, c: &R| {
        l0.clone() * w3(a, b, c) * f3(a, b, c) + l1.clone() * w6(a, b, c) * f6(a, b, c)
    };
    let base = CenterFunction::new(None, None, Some(3), Traceability::Unknown, Arc::new(eval));
    let mut member = if spec.kind.is_inverse() {
        isogonal_conjugate(&base)
    } else {
        base
    };
    if spec.sigma != 0.0 {
        member = scaled_center(&member, R::from_f64(spec.sigma))?;
    }
    Ok(member.with_id(&label))
}
