use std::fmt;

use serde::{Deserialize, Serialize};

use super::ops::forward_all;
use super::{CycloElem, EisensteinInt, Rational, RealQuad};

/// An element `u + v√3` of ℚ(ω, √3), with `u, v ∈ ℚ(ω)`.
///
/// Complex conjugation acts on `u` and `v` and fixes `√3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FieldElem {
    pub u: CycloElem,
    pub v: CycloElem,
}

impl FieldElem {
    pub fn new(u: CycloElem, v: CycloElem) -> Self {
        FieldElem { u, v }
    }

    pub fn zero() -> Self {
        FieldElem::new(CycloElem::zero(), CycloElem::zero())
    }

    pub fn one() -> Self {
        FieldElem::from(CycloElem::one())
    }

    pub fn omega() -> Self {
        FieldElem::from(CycloElem::omega())
    }

    pub fn omega_bar() -> Self {
        FieldElem::from(&EisensteinInt::omega_bar())
    }

    pub fn theta() -> Self {
        FieldElem::from(CycloElem::theta())
    }

    pub fn sqrt3() -> Self {
        FieldElem::new(CycloElem::zero(), CycloElem::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        FieldElem::from(CycloElem::from_rational(r))
    }

    pub fn from_int(n: i64) -> Self {
        FieldElem::from(&EisensteinInt::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn conj(&self) -> Self {
        FieldElem::new(self.u.conj(), self.v.conj())
    }

    /// `x·x̄` as a real element.
    pub fn abs_sq(&self) -> RealQuad {
        let three = Rational::from_integer(3.into());
        let cross = &self.u * &self.v.conj();
        RealQuad::new(self.u.norm() + three * self.v.norm(), cross.re() * Rational::from_integer(2.into()))
    }

    /// `(x + x̄)/2`.
    pub fn re_part(&self) -> RealQuad {
        RealQuad::new(self.u.re(), self.v.re())
    }

    /// `(x - x̄)/2`, which is purely imaginary: the imaginary part of `θ` is
    /// `θ`, not `√3`.
    pub fn im_part(&self) -> FieldElem {
        let half = Rational::new(1.into(), 2.into());
        let d = self - &self.conj();
        FieldElem::new(d.u.scale(&half), d.v.scale(&half))
    }

    /// The real number `t` with `im_part(x) = tθ`.
    pub fn im_over_theta(&self) -> RealQuad {
        RealQuad::new(self.u.im_over_theta(), self.v.im_over_theta())
    }

    pub fn is_real(&self) -> bool {
        self.u.is_real() && self.v.is_real()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re_part().is_zero()
    }

    pub fn to_real(&self) -> Option<RealQuad> {
        self.is_real().then(|| RealQuad::new(self.u.a.clone(), self.v.a.clone()))
    }

    /// `Some(u)` when the `√3` component vanishes.
    pub fn to_cyclo(&self) -> Option<CycloElem> {
        self.v.is_zero().then(|| self.u.clone())
    }

    /// `Some(x)` when `x ∈ ℰ`.
    pub fn to_eisenstein(&self) -> Option<EisensteinInt> {
        self.to_cyclo().and_then(|u| u.to_integer())
    }

    pub fn is_integral(&self) -> bool {
        self.to_eisenstein().is_some()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FieldElem::new(self.u.scale(r), self.v.scale(r))
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        // (u + v√3)^-1 = (u - v√3)/(u² - 3v²), and u² - 3v² ≠ 0 because
        // √3 ∉ ℚ(ω)
        let three = CycloElem::from_rational(Rational::from_integer(3.into()));
        let n = &self.u * &self.u - &three * &(&self.v * &self.v);
        assert!(!n.is_zero(), "inverse of zero in Q(omega, sqrt3)");
        let ninv = n.inv();
        FieldElem::new(&self.u * &ninv, -(&self.v * &ninv))
    }
}

impl From<CycloElem> for FieldElem {
    fn from(u: CycloElem) -> Self {
        FieldElem::new(u, CycloElem::zero())
    }
}

impl From<&EisensteinInt> for FieldElem {
    fn from(x: &EisensteinInt) -> Self {
        FieldElem::from(CycloElem::from(x))
    }
}

impl From<EisensteinInt> for FieldElem {
    fn from(x: EisensteinInt) -> Self {
        FieldElem::from(&x)
    }
}

impl From<&RealQuad> for FieldElem {
    fn from(x: &RealQuad) -> Self {
        FieldElem::new(CycloElem::from_rational(x.p.clone()), CycloElem::from_rational(x.q.clone()))
    }
}

impl From<RealQuad> for FieldElem {
    fn from(x: RealQuad) -> Self {
        FieldElem::from(&x)
    }
}

impl<'a> std::ops::Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::new(&self.u + &rhs.u, &self.v + &rhs.v)
    }
}

impl<'a> std::ops::Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::new(&self.u - &rhs.u, &self.v - &rhs.v)
    }
}

impl<'a> std::ops::Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        if self.v.is_zero() && rhs.v.is_zero() {
            return FieldElem::from(&self.u * &rhs.u);
        }
        let three = Rational::from_integer(3.into());
        FieldElem::new(
            &self.u * &rhs.u + (&self.v * &rhs.v).scale(&three),
            &self.u * &rhs.v + &self.v * &rhs.u,
        )
    }
}

impl std::ops::Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(-&self.u, -&self.v)
    }
}

forward_all!(FieldElem);

impl std::ops::Div<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self * &rhs.inv()
    }
}

impl std::ops::Div<FieldElem> for FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: FieldElem) -> FieldElem {
        &self * &rhs.inv()
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{}", self.u)
        } else if self.u.is_zero() {
            write!(f, "[{}]√3", self.v)
        } else {
            write!(f, "{} + [{}]√3", self.u, self.v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, rint};

    #[test]
    fn conjugation_examples() {
        let t = FieldElem::theta();
        assert_eq!(t.conj(), -&t);
        assert_eq!(FieldElem::omega().conj(), FieldElem::omega_bar());
        let two_sqrt3 = FieldElem::sqrt3().scale(&rint(2));
        assert_eq!(two_sqrt3.conj(), two_sqrt3);
    }

    #[test]
    fn abs_sq_examples() {
        let one_minus_omega = FieldElem::from(&EisensteinInt::new(1, -1));
        assert_eq!(one_minus_omega.abs_sq(), RealQuad::from_int(3));
        assert_eq!(FieldElem::theta().abs_sq(), RealQuad::from_int(3));
        let x = FieldElem::from_int(2) * FieldElem::omega_bar() * FieldElem::theta().conj();
        assert_eq!(x.abs_sq(), RealQuad::from_int(12));
        let mixed = FieldElem::new(CycloElem::new(rat(1, 2), rint(1)), CycloElem::new(rint(-1), rat(1, 3)));
        assert_eq!(FieldElem::from(mixed.abs_sq()), &mixed * &mixed.conj());
    }

    #[test]
    fn imaginary_parts() {
        assert_eq!(FieldElem::theta().im_part(), FieldElem::theta());
        assert_eq!(FieldElem::from_int(5).im_part(), FieldElem::zero());
        let one_plus_two_omega = FieldElem::from(&EisensteinInt::new(1, 2));
        assert_eq!(one_plus_two_omega.im_part(), FieldElem::theta());
        assert_eq!(FieldElem::theta().im_over_theta(), RealQuad::one());
    }

    #[test]
    fn sqrt3_squares_to_three() {
        assert_eq!(FieldElem::sqrt3() * FieldElem::sqrt3(), FieldElem::from_int(3));
        // i = √3/θ... check (√3/θ)² = -1
        let i = FieldElem::sqrt3() / FieldElem::theta();
        assert_eq!(&i * &i, FieldElem::from_int(-1));
    }

    #[test]
    fn json_shape() {
        let x = FieldElem::new(CycloElem::new(rint(-2), rint(0)), CycloElem::new(rint(2), rint(0)));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"u":[-2,0,1,1],"v":[2,0,1,1]}"#);
    }
}
