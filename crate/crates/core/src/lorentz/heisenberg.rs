use serde::{Deserialize, Serialize};

use super::{AmbientVector, LorentzError};
use crate::field::{rat, rint, EisensteinInt, FieldElem};
use crate::leech::{self, LeechPoint};

/// The translation `T_{λ,z}` fixing `ρ`:
/// `(σ; y, c) ↦ (σ + yλ; y, c + ⟨σ, λ⟩/θ̄ + y(z - λ²/2)/θ)`.
///
/// Requires `λ ∈ Λ`, `z` imaginary and `z - λ²/2 ∈ θℰ`; the admissible `z`
/// for a given `λ` form the coset `θλ²/6 + θℤ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeisenbergElement {
    pub lambda: LeechPoint,
    pub z: FieldElem,
}

impl HeisenbergElement {
    pub fn new(lambda: LeechPoint, z: FieldElem) -> Result<Self, LorentzError> {
        let h = HeisenbergElement { lambda, z };
        h.validate()?;
        Ok(h)
    }

    /// `T_{λ, θλ²/6 + kθ}`.
    pub fn with_offset(lambda: LeechPoint, k: i64) -> Self {
        let theta = FieldElem::theta();
        let z = theta.scale(&(lambda.norm() * rat(1, 6) + rint(k)));
        HeisenbergElement { lambda, z }
    }

    /// The central translation `T_{0, kθ}`, adding `kθ·y` to the last
    /// coordinate.
    pub fn central(k: i64) -> Self {
        HeisenbergElement::with_offset(LeechPoint::zero(), k)
    }

    pub fn identity() -> Self {
        HeisenbergElement::central(0)
    }

    pub fn validate(&self) -> Result<(), LorentzError> {
        if !leech::standard().contains(&self.lambda) {
            return Err(LorentzError::InvalidTranslation("lambda is not in the Leech lattice".into()));
        }
        if !self.z.is_imaginary() {
            return Err(LorentzError::InvalidTranslation(format!("z = {} is not imaginary", self.z)));
        }
        let half_norm = FieldElem::from_rational(self.lambda.norm() * rat(1, 2));
        let ok = (&self.z - &half_norm)
            .to_eisenstein()
            .is_some_and(|w| w.is_divisible_by(&EisensteinInt::theta()));
        if !ok {
            return Err(LorentzError::InvalidTranslation(format!("z - lambda^2/2 is not in theta E for z = {}", self.z)));
        }
        Ok(())
    }

    pub fn apply(&self, v: &AmbientVector) -> AmbientVector {
        let theta = FieldElem::theta();
        let lam: [FieldElem; 12] = std::array::from_fn(|i| FieldElem::from(&self.lambda.coords[i]));
        let lam_v = AmbientVector::leech_part(lam.clone());
        let half_norm = FieldElem::from_rational(self.lambda.norm() * rat(1, 2));
        let sigma = std::array::from_fn(|i| &v.sigma[i] + &(&v.y * &lam[i]));
        let z = &v.z + &(v.sigma_inner(&lam_v) / theta.conj()) + &v.y * &(&self.z - &half_norm) / theta;
        AmbientVector::new(sigma, v.y.clone(), z)
    }

    /// `self ∘ other = T_{λ+λ', z+z'+Im⟨λ,λ'⟩}`.
    pub fn compose(&self, other: &HeisenbergElement) -> HeisenbergElement {
        let im = FieldElem::from(self.lambda.inner_exact(&other.lambda)).im_part();
        HeisenbergElement {
            lambda: &self.lambda + &other.lambda,
            z: &self.z + &other.z + im,
        }
    }

    pub fn inverse(&self) -> HeisenbergElement {
        HeisenbergElement { lambda: -&self.lambda, z: -&self.z }
    }
}
