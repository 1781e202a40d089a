use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::json::{rational_from, rational_parts, JsonInt};
use super::ops::forward_all;
use super::{EisensteinInt, Rational};

/// An element `a + bω` of the cyclotomic field ℚ(ω) = ℚ(√-3).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "[JsonInt; 4]", try_from = "[JsonInt; 4]")]
pub struct CycloElem {
    pub a: Rational,
    pub b: Rational,
}

impl CycloElem {
    pub fn new(a: Rational, b: Rational) -> Self {
        CycloElem { a, b }
    }

    pub fn zero() -> Self {
        CycloElem::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        CycloElem::new(Rational::one(), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloElem::new(r, Rational::zero())
    }

    pub fn omega() -> Self {
        CycloElem::from(&EisensteinInt::omega())
    }

    pub fn theta() -> Self {
        CycloElem::from(&EisensteinInt::theta())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        CycloElem::new(&self.a - &self.b, -&self.b)
    }

    /// `|x|² = a² - ab + b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero in Q(omega)");
        let c = self.conj();
        CycloElem::new(c.a / &n, c.b / n)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloElem::new(&self.a * r, &self.b * r)
    }

    /// Real part `a - b/2`.
    pub fn re(&self) -> Rational {
        &self.a - &self.b / Rational::from_integer(2.into())
    }

    /// The real number `t` with `(x - x̄)/2 = tθ`, i.e. `b/2`.
    pub fn im_over_theta(&self) -> Rational {
        &self.b / Rational::from_integer(2.into())
    }

    /// `Some(x)` when every coordinate is an integer.
    pub fn to_integer(&self) -> Option<EisensteinInt> {
        if self.a.is_integer() && self.b.is_integer() {
            Some(EisensteinInt::from_parts(self.a.to_integer(), self.b.to_integer()))
        } else {
            None
        }
    }
}

impl<'a> std::ops::Add<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        CycloElem::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> std::ops::Sub<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        CycloElem::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> std::ops::Mul<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let cross = &self.a * &rhs.b + &self.b * &rhs.a;
        CycloElem::new(&ac - &bd, cross - bd)
    }
}

impl std::ops::Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem::new(-&self.a, -&self.b)
    }
}

forward_all!(CycloElem);

impl std::ops::Div<&CycloElem> for &CycloElem {
    type Output = CycloElem;
    fn div(self, rhs: &CycloElem) -> CycloElem {
        self * &rhs.inv()
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "({})ω", self.b)
        } else {
            write!(f, "{} + ({})ω", self.a, self.b)
        }
    }
}

impl From<CycloElem> for [JsonInt; 4] {
    fn from(x: CycloElem) -> Self {
        let (an, ad) = rational_parts(&x.a);
        let (bn, bd) = rational_parts(&x.b);
        [an, bn, ad, bd]
    }
}

impl TryFrom<[JsonInt; 4]> for CycloElem {
    type Error = String;
    fn try_from([an, bn, ad, bd]: [JsonInt; 4]) -> Result<Self, String> {
        Ok(CycloElem::new(rational_from(an, ad)?, rational_from(bn, bd)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn inverse_and_norm() {
        let x = CycloElem::new(rat(3, 2), rat(-1, 3));
        assert_eq!(&x * &x.inv(), CycloElem::one());
        assert_eq!(CycloElem::theta().norm(), rat(3, 1));
    }

    #[test]
    fn theta_is_imaginary() {
        let t = CycloElem::theta();
        assert_eq!(t.re(), rat(0, 1));
        assert_eq!(t.im_over_theta(), rat(1, 1));
        assert_eq!(t.conj(), -&t);
    }

    #[test]
    fn nearest_integer() {
        let x = CycloElem::new(rat(7, 5), rat(-2, 5));
        // |x - 1|² = 12/25 but |x - (1 - ω)|² = 7/25
        assert_eq!(x.nearest_integer(), EisensteinInt::new(1, -1));
    }

    #[test]
    fn json_layout() {
        let x = CycloElem::new(rat(1, 2), rat(-3, 4));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[1,-3,2,4]");
        let back: CycloElem = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
