//! The designed triangle family of a polar target and its
//! homothety–aliquot decomposition.
//!
//! Given a target `t ↦ r(t)·(cos θ(t), sin θ(t))`, the generating
//! triple
//!
//! ```text
//! Ψ1 = 1 + r(cos(θ/3) + √3 sin(θ/3))
//! Ψ2 = 1 + r(cos(θ/3) − √3 sin(θ/3))
//! Ψ3 = 1 − 2r cos(θ/3)
//! ```
//!
//! sums to 3 identically, and any invariant-quadruple center traced
//! along the resulting family draws a similar copy of the target; any
//! other semi-invariant center draws a fixed sheared copy.

use std::sync::Arc;

use families::{concat_triples, TriangleFamily};
use geom_core::Real;

use crate::error::InverseDesignError;
use crate::target::PolarTarget;

/// Floor on `|−1 + 2cos(2θ/3)|` below which the aliquot-parameter
/// branch function is reported as a pole.
pub const BRANCH_POLE_EPS: f64 = 1e-9;

/// The generating triple of the designed family at one target sample.
fn designed_triple<R: Real>(r: R, theta: R) -> [R; 3] {
    let third = theta / R::from_f64(3.0);
    let cos = third.cos();
    let sin = third.sin();
    let radial = r.clone() * &cos;
    let lateral = r * &(R::from_f64(3.0).sqrt() * sin);
    [
        R::one() + &radial + &lateral,
        R::one() + &radial - &lateral,
        R::one() - &(R::from_f64(2.0) * radial),
    ]
}

pub(crate) fn family_with_label<R: Real>(
    target: &PolarTarget<R>,
    label: impl Into<String>,
) -> Result<TriangleFamily<R>, InverseDesignError> {
    let radius = Arc::clone(&target.radius);
    let angle = Arc::clone(&target.angle);
    let triple = move |t: &R| designed_triple(radius(t), angle(t));
    TriangleFamily::new_closure(label, triple, target.domain(), Vec::new()).map_err(Into::into)
}

/// The triangle family whose center loci reproduce `target`.
pub fn family_from_target<R: Real>(
    target: &PolarTarget<R>,
) -> Result<TriangleFamily<R>, InverseDesignError> {
    family_with_label(target, "designed")
}

/// The designed family of the rose target
/// `r = amplitude·cos(petals·t)`, `θ = t`.
pub fn rose_family<R: Real>(
    amplitude: f64,
    petals: i32,
) -> Result<TriangleFamily<R>, InverseDesignError> {
    let target = PolarTarget::rose(amplitude, petals)?;
    family_with_label(&target, format!("rose({amplitude},{petals})"))
}

type TargetFn<R> = Arc<dyn Fn(&R) -> R + Send + Sync>;

/// The scaling factor `σ(t)` and aliquot parameter `τ(t)` that write
/// the designed family as homothety ∘ aliquot at each parameter.
#[derive(Clone)]
pub struct TargetDecomposition<R> {
    radius: TargetFn<R>,
    angle: TargetFn<R>,
}

impl<R: Real> TargetDecomposition<R> {
    /// `σ(t) = −r(cos(θ/3) + √3 sin(θ/3))`: the homothety ratio about
    /// the centroid.
    pub fn sigma(&self, t: &R) -> R {
        let r = (self.radius)(t);
        let third = (self.angle)(t) / R::from_f64(3.0);
        let direction = third.cos() + &(R::from_f64(3.0).sqrt() * third.sin());
        -(r * &direction)
    }

    /// `τ(t) = (3 + (3 − 2√3 sin(2θ/3)) / (−1 + 2cos(2θ/3))) / 6`: the
    /// aliquot parameter, with a branch pole where the denominator
    /// vanishes.
    pub fn tau(&self, t: &R) -> Result<R, InverseDesignError> {
        let two_thirds = (self.angle)(t) * R::from_f64(2.0) / R::from_f64(3.0);
        let denominator = R::from_f64(2.0) * two_thirds.cos() - R::one();
        if denominator.to_f64().abs() <= BRANCH_POLE_EPS {
            return Err(InverseDesignError::BranchPole {
                t: t.to_f64(),
                denominator: denominator.to_f64(),
            });
        }
        let three = R::from_f64(3.0);
        let numerator =
            three.clone() - &(R::from_f64(2.0) * three.sqrt() * two_thirds.sin());
        Ok((three + &(numerator / &denominator)) / R::from_f64(6.0))
    }

    /// The triple `Φ_scaling(σ(t)) ∘ Φ_aliquot(τ(t))`; equals the
    /// designed triple of the same target away from branch poles.
    pub fn reconstruct(&self, t: &R) -> Result<[R; 3], InverseDesignError> {
        let sigma = self.sigma(t);
        let tau = self.tau(t)?;
        let scaling = TriangleFamily::<R>::scaling().eval(&sigma);
        let aliquot = TriangleFamily::<R>::aliquot().eval(&tau);
        Ok(concat_triples(&scaling, &aliquot))
    }
}

/// The decomposition maps of a target's designed family.
pub fn sigma_tau_from_target<R: Real>(target: &PolarTarget<R>) -> TargetDecomposition<R> {
    TargetDecomposition {
        radius: Arc::clone(&target.radius),
        angle: Arc::clone(&target.angle),
    }
}
