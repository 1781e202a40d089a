use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::linalg::{hermitian, to_cyclo_vec};
use crate::field::{CycloElem, EisensteinInt, FieldElem, Rational};

/// A vector of ℰ¹²; inside the crate it is always a member of Λ unless a
/// function says otherwise.
///
/// Ordered lexicographically by coordinates; closest-vector ties are broken
/// by this order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LeechPoint {
    pub coords: [EisensteinInt; 12],
}

impl LeechPoint {
    pub fn new(coords: [EisensteinInt; 12]) -> Self {
        LeechPoint { coords }
    }

    pub fn from_slice(coords: &[EisensteinInt]) -> Option<Self> {
        <[EisensteinInt; 12]>::try_from(coords.to_vec()).ok().map(LeechPoint::new)
    }

    pub fn zero() -> Self {
        LeechPoint::default()
    }

    /// `eᵢ` scaled by `x`.
    pub fn unit_vector(i: usize, x: EisensteinInt) -> Self {
        let mut p = LeechPoint::zero();
        p.coords[i] = x;
        p
    }

    /// `θ²(e₁ - e₂) = (-3, 3, 0, …)`, of norm 6.
    pub fn lambda6() -> Self {
        let mut p = LeechPoint::zero();
        p.coords[0] = EisensteinInt::from_int(-3);
        p.coords[1] = EisensteinInt::from_int(3);
        p
    }

    /// `θ²(1 - ω)e₁ = (-3 + 3ω)e₁`, of norm 9.
    pub fn lambda9() -> Self {
        LeechPoint::unit_vector(0, EisensteinInt::new(-3, 3))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, k: &EisensteinInt) -> Self {
        LeechPoint::new(std::array::from_fn(|i| k * &self.coords[i]))
    }

    /// `⅓ Σ xᵢ ȳᵢ` without assuming membership.
    pub fn inner_exact(&self, other: &LeechPoint) -> CycloElem {
        hermitian(&to_cyclo_vec(&self.coords), &to_cyclo_vec(&other.coords))
    }

    /// The Leech inner product. Members of Λ pair into `θℰ`.
    ///
    /// # Panics
    /// If the pairing is not in ℰ, which cannot happen for members of Λ.
    pub fn inner(&self, other: &LeechPoint) -> EisensteinInt {
        let mut acc = EisensteinInt::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            acc += a * &b.conj();
        }
        acc.div_exact(&EisensteinInt::from_int(3))
            .expect("inner product of lattice points lies in the Eisenstein integers")
    }

    /// `⟨x, x⟩` as a rational; an integer in `3ℤ` for members of Λ.
    pub fn norm(&self) -> Rational {
        let s: BigInt = self.coords.iter().map(|x| x.norm()).sum();
        Rational::new(s, BigInt::from(3))
    }

    pub fn to_cyclo(&self) -> Vec<CycloElem> {
        to_cyclo_vec(&self.coords)
    }

    pub fn to_field(&self) -> Vec<FieldElem> {
        self.coords.iter().map(FieldElem::from).collect()
    }
}

impl std::ops::Add<&LeechPoint> for &LeechPoint {
    type Output = LeechPoint;
    fn add(self, rhs: &LeechPoint) -> LeechPoint {
        LeechPoint::new(std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]))
    }
}

impl std::ops::Sub<&LeechPoint> for &LeechPoint {
    type Output = LeechPoint;
    fn sub(self, rhs: &LeechPoint) -> LeechPoint {
        LeechPoint::new(std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]))
    }
}

impl std::ops::Neg for &LeechPoint {
    type Output = LeechPoint;
    fn neg(self) -> LeechPoint {
        LeechPoint::new(std::array::from_fn(|i| -&self.coords[i]))
    }
}

impl fmt::Display for LeechPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
