use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::field::{rat, EisensteinInt, FieldElem, RealQuad};
use crate::leech::LeechPoint;

/// A vector `(σ; y, z)` of `L ⊗ ℚ(ω, √3)`, with `σ` in the span of Λ.
///
/// Coordinates are always field elements; integrality is a predicate
/// ([`AmbientVector::is_integral`]), since intermediate points such as
/// mirror projections leave the lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AmbientVector {
    pub sigma: [FieldElem; 12],
    pub y: FieldElem,
    pub z: FieldElem,
}

impl AmbientVector {
    pub fn new(sigma: [FieldElem; 12], y: FieldElem, z: FieldElem) -> Self {
        AmbientVector { sigma, y, z }
    }

    pub fn integral(sigma: &LeechPoint, y: EisensteinInt, z: EisensteinInt) -> Self {
        AmbientVector::new(
            std::array::from_fn(|i| FieldElem::from(&sigma.coords[i])),
            FieldElem::from(y),
            FieldElem::from(z),
        )
    }

    pub fn zero() -> Self {
        AmbientVector::new(Default::default(), FieldElem::zero(), FieldElem::zero())
    }

    /// The null vector `ρ = (0; 0, 1)`, the cusp all heights refer to.
    pub fn rho() -> Self {
        AmbientVector::new(Default::default(), FieldElem::zero(), FieldElem::one())
    }

    /// `(σ; 0, 0)` for a vector of Λ ⊗ ℚ(ω, √3).
    pub fn leech_part(sigma: [FieldElem; 12]) -> Self {
        AmbientVector::new(sigma, FieldElem::zero(), FieldElem::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.y.is_zero() && self.z.is_zero() && self.sigma.iter().all(|x| x.is_zero())
    }

    /// All coordinates lie in ℰ. Membership in L additionally needs `σ ∈ Λ`.
    pub fn is_integral(&self) -> bool {
        self.y.is_integral() && self.z.is_integral() && self.sigma.iter().all(|x| x.is_integral())
    }

    /// The coordinates in ℰ, if they all are.
    pub fn to_integral(&self) -> Option<(LeechPoint, EisensteinInt, EisensteinInt)> {
        let coords: Option<Vec<EisensteinInt>> = self.sigma.iter().map(|x| x.to_eisenstein()).collect();
        Some((LeechPoint::from_slice(&coords?)?, self.y.to_eisenstein()?, self.z.to_eisenstein()?))
    }

    /// Left multiplication by a scalar.
    pub fn scale(&self, c: &FieldElem) -> Self {
        AmbientVector::new(std::array::from_fn(|i| c * &self.sigma[i]), c * &self.y, c * &self.z)
    }

    /// `⟨σ, σ'⟩ = ⅓ Σ σᵢ σ̄'ᵢ` on the Leech parts.
    pub fn sigma_inner(&self, other: &AmbientVector) -> FieldElem {
        let mut acc = FieldElem::zero();
        for (a, b) in self.sigma.iter().zip(&other.sigma) {
            acc += a * &b.conj();
        }
        acc.scale(&rat(1, 3))
    }

    pub fn sigma_norm(&self) -> RealQuad {
        self.sigma_inner(self).to_real().expect("Hermitian norm is real")
    }

    /// `v² = ⟨v, v⟩`, real because the form is Hermitian.
    pub fn norm(&self) -> RealQuad {
        ip(self, self).to_real().expect("Hermitian norm is real")
    }
}

/// The Hermitian form of L: `⟨σ, σ'⟩ + y θ̄ z̄' + z θ ȳ'`, the Leech form
/// plus the hyperbolic cell with Gram `[[0, θ̄], [θ, 0]]`. Linear in `v`,
/// antilinear in `w`.
pub fn ip(v: &AmbientVector, w: &AmbientVector) -> FieldElem {
    let theta = FieldElem::theta();
    let theta_bar = theta.conj();
    v.sigma_inner(w) + &v.y * &theta_bar * w.z.conj() + &v.z * &theta * w.y.conj()
}

impl std::ops::Add<&AmbientVector> for &AmbientVector {
    type Output = AmbientVector;
    fn add(self, rhs: &AmbientVector) -> AmbientVector {
        AmbientVector::new(
            std::array::from_fn(|i| &self.sigma[i] + &rhs.sigma[i]),
            &self.y + &rhs.y,
            &self.z + &rhs.z,
        )
    }
}

impl std::ops::Sub<&AmbientVector> for &AmbientVector {
    type Output = AmbientVector;
    fn sub(self, rhs: &AmbientVector) -> AmbientVector {
        AmbientVector::new(
            std::array::from_fn(|i| &self.sigma[i] - &rhs.sigma[i]),
            &self.y - &rhs.y,
            &self.z - &rhs.z,
        )
    }
}

impl std::ops::Neg for &AmbientVector {
    type Output = AmbientVector;
    fn neg(self) -> AmbientVector {
        AmbientVector::new(std::array::from_fn(|i| -&self.sigma[i]), -&self.y, -&self.z)
    }
}

impl fmt::Display for AmbientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if self.sigma.iter().all(|x| x.is_zero()) {
            write!(f, "0")?;
        } else {
            for (i, x) in self.sigma.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "; {}, {})", self.y, self.z)
    }
}

/// Integral vectors are written as Eisenstein pairs, anything else in the
/// field encoding.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum VectorRepr {
    Integral {
        sigma: [EisensteinInt; 12],
        y: EisensteinInt,
        z: EisensteinInt,
    },
    Field {
        sigma: [FieldElem; 12],
        y: FieldElem,
        z: FieldElem,
    },
}

impl Serialize for AmbientVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = match self.to_integral() {
            Some((sigma, y, z)) => VectorRepr::Integral { sigma: sigma.coords, y, z },
            None => VectorRepr::Field {
                sigma: self.sigma.clone(),
                y: self.y.clone(),
                z: self.z.clone(),
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AmbientVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(match VectorRepr::deserialize(d)? {
            VectorRepr::Integral { sigma, y, z } => AmbientVector::integral(&LeechPoint::new(sigma), y, z),
            VectorRepr::Field { sigma, y, z } => AmbientVector::new(sigma, y, z),
        })
    }
}
