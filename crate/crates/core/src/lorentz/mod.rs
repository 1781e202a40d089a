//! The Lorentzian lattice `L = Λ ⊕ [[0, θ̄], [θ, 0]]` of signature (13, 1),
//! its geometry in complex hyperbolic space, and the maps the reduction uses.
//!
//! Points of CH¹³ are negative-norm vectors up to scale, boundary points are
//! null vectors, and hyperplanes are positive-norm vectors. Distances are
//! carried as `cosh²` or `sinh²` values in [`RealQuad`], never as lengths.

mod heisenberg;
mod root;
mod vector;

pub use heisenberg::HeisenbergElement;
pub use root::{decompose, in_lattice, is_leech_root, leech_root, recompose, Decomposition, LeechRootSpec, Root};
pub use vector::{ip, AmbientVector};

use serde::{Deserialize, Serialize};

use crate::field::{rat, FieldElem, RealQuad};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LorentzError {
    #[error("vector has norm zero")]
    ZeroNorm,
    #[error("vector does not have negative norm")]
    NotNegativeNorm,
    #[error("reference vector is not null")]
    NotNull,
    #[error("vector is orthogonal to rho")]
    InRhoPerp,
    #[error("invalid nu_l: {0}")]
    InvalidNu(String),
    #[error("invalid translation: {0}")]
    InvalidTranslation(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("invalid region: {0}")]
    InvalidRegion(String),
}

/// The eigenvalue of a triflection on its root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Zeta {
    Omega,
    OmegaBar,
}

impl Zeta {
    pub fn value(self) -> FieldElem {
        match self {
            Zeta::Omega => FieldElem::omega(),
            Zeta::OmegaBar => FieldElem::omega_bar(),
        }
    }

    /// `R_{s,ζ̄} = R_{s,ζ}⁻¹`.
    pub fn inverse(self) -> Zeta {
        match self {
            Zeta::Omega => Zeta::OmegaBar,
            Zeta::OmegaBar => Zeta::Omega,
        }
    }
}

/// `ht_v(w) = -|⟨v, w⟩|² / w²`, invariant under rescaling `w`.
pub fn height(v: &AmbientVector, w: &AmbientVector) -> Result<RealQuad, LorentzError> {
    if v.is_zero() || !v.norm().is_zero() {
        return Err(LorentzError::NotNull);
    }
    let n = w.norm();
    if n.is_zero() {
        return Err(LorentzError::ZeroNorm);
    }
    Ok(-(ip(v, w).abs_sq() / n))
}

/// `cosh² d(V, W) = |⟨v, w⟩|² / (v² w²)`.
pub fn cosh_sq_dist(v: &AmbientVector, w: &AmbientVector) -> Result<RealQuad, LorentzError> {
    let (nv, nw) = (v.norm(), w.norm());
    if !nv.is_negative() || !nw.is_negative() {
        return Err(LorentzError::NotNegativeNorm);
    }
    Ok(ip(v, w).abs_sq() / (nv * nw))
}

/// `sinh² d(V, s⊥) = -|⟨v, s⟩|² / (v² s²)`.
pub fn sinh_sq_dist_mirror(v: &AmbientVector, s: &Root) -> Result<RealQuad, LorentzError> {
    let nv = v.norm();
    if !nv.is_negative() {
        return Err(LorentzError::NotNegativeNorm);
    }
    Ok(-(ip(v, s.vector()).abs_sq() / (nv * RealQuad::from_int(3))))
}

/// `v - (⟨v, s⟩/3) s`, the orthogonal projection to `s⊥`.
pub fn project_to_mirror(v: &AmbientVector, s: &Root) -> AmbientVector {
    let c = ip(v, s.vector()).scale(&rat(1, 3));
    v - &s.vector().scale(&c)
}

/// `x - (1 - ζ)(⟨x, s⟩/3) s`: fixes `s⊥` and multiplies `s` by `ζ`.
pub fn triflection(s: &Root, zeta: Zeta, x: &AmbientVector) -> AmbientVector {
    let c = (FieldElem::one() - zeta.value()) * ip(x, s.vector()).scale(&rat(1, 3));
    x - &s.vector().scale(&c)
}

/// A triflection applied to a root is again a root.
pub fn triflect_root(s: &Root, zeta: Zeta, x: &Root) -> Root {
    Root::new(triflection(s, zeta, x.vector())).expect("triflections in roots preserve L and norms")
}

/// The horoball `{ht_center < height}` (open) or `≤` (closed).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoroballSpec {
    pub center: AmbientVector,
    pub height: RealQuad,
}

impl HoroballSpec {
    pub fn new(center: AmbientVector, height: RealQuad) -> Result<Self, LorentzError> {
        if center.is_zero() || !center.norm().is_zero() {
            return Err(LorentzError::NotNull);
        }
        if !height.is_positive() {
            return Err(LorentzError::InvalidRegion(format!("height {height} is not positive")));
        }
        Ok(HoroballSpec { center, height })
    }

    pub fn contains_open(&self, x: &AmbientVector) -> Result<bool, LorentzError> {
        Ok(height(&self.center, x)? < self.height)
    }

    pub fn contains_closed(&self, x: &AmbientVector) -> Result<bool, LorentzError> {
        Ok(height(&self.center, x)? <= self.height)
    }
}

/// The open ball `{x : sinh² d(x, center) < sinh_sq_radius}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallSpec {
    pub center: AmbientVector,
    pub sinh_sq_radius: RealQuad,
}

impl BallSpec {
    pub fn new(center: AmbientVector, sinh_sq_radius: RealQuad) -> Result<Self, LorentzError> {
        if !center.norm().is_negative() {
            return Err(LorentzError::NotNegativeNorm);
        }
        if !sinh_sq_radius.is_positive() {
            return Err(LorentzError::InvalidRegion(format!("radius {sinh_sq_radius} is not positive")));
        }
        Ok(BallSpec { center, sinh_sq_radius })
    }

    pub fn contains(&self, x: &AmbientVector) -> Result<bool, LorentzError> {
        let sinh_sq = cosh_sq_dist(&self.center, x)? - RealQuad::one();
        Ok(sinh_sq < self.sinh_sq_radius)
    }
}
