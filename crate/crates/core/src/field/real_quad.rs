use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::json::{rational_from, rational_parts, JsonInt};
use super::ops::forward_all;
use super::{floor_rat, floor_sqrt_rat, Rational};

/// A real number `p + q√3` with rational `p`, `q`.
///
/// Totally ordered by the exact sign rule; this is the type of every height,
/// squared distance ratio and `cosh²`/`sinh²` value in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "[JsonInt; 4]", try_from = "[JsonInt; 4]")]
pub struct RealQuad {
    pub p: Rational,
    pub q: Rational,
}

fn rsign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl RealQuad {
    pub fn new(p: Rational, q: Rational) -> Self {
        RealQuad { p, q }
    }

    pub fn zero() -> Self {
        RealQuad::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        RealQuad::from_rational(Rational::one())
    }

    pub fn from_rational(p: Rational) -> Self {
        RealQuad::new(p, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        RealQuad::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `√3`.
    pub fn sqrt3() -> Self {
        RealQuad::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Exact sign of `p + q√3`: no rounding is involved. When the two terms
    /// have opposite signs the larger of `p²` and `3q²` wins; they cannot be
    /// equal unless both vanish, since √3 is irrational.
    pub fn sign(&self) -> i8 {
        let sp = rsign(&self.p);
        let sq = rsign(&self.q);
        if sq == 0 {
            return sp;
        }
        if sp == 0 || sp == sq {
            return sq;
        }
        let pp = &self.p * &self.p;
        let qq = &self.q * &self.q * Rational::from_integer(BigInt::from(3));
        if pp > qq {
            sp
        } else {
            sq
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Conjugate under `√3 ↦ -√3`.
    pub fn galois_conj(&self) -> Self {
        RealQuad::new(self.p.clone(), -&self.q)
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        let n = &self.p * &self.p - &self.q * &self.q * Rational::from_integer(BigInt::from(3));
        assert!(!n.is_zero(), "inverse of zero in Q(sqrt3)");
        RealQuad::new(&self.p / &n, -&self.q / n)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        RealQuad::new(&self.p * r, &self.q * r)
    }

    /// `√r` when it lies in ℚ(√3), i.e. when `r` is a rational square or
    /// three times one.
    pub fn sqrt_of_rational(r: &Rational) -> Option<RealQuad> {
        if r.is_negative() {
            return None;
        }
        if let Some(s) = rational_sqrt(r) {
            return Some(RealQuad::from_rational(s));
        }
        let third = r / Rational::from_integer(BigInt::from(3));
        rational_sqrt(&third).map(|s| RealQuad::new(Rational::zero(), s))
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        let q_sqrt3 = {
            let t = &self.q * &self.q * Rational::from_integer(BigInt::from(3));
            let f = floor_sqrt_rat(&t);
            if self.q.is_negative() {
                -f - 1
            } else {
                f
            }
        };
        let mut k: BigInt = floor_rat(&self.p) + q_sqrt3 - 1;
        while (self - &RealQuad::from_rational(Rational::from_integer(&k + 1))).sign() >= 0 {
            k += 1;
        }
        while (self - &RealQuad::from_rational(Rational::from_integer(k.clone()))).sign() < 0 {
            k -= 1;
        }
        k
    }

    /// A decimal approximation for human-readable reports only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.p.to_f64().unwrap_or(f64::NAN) + self.q.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub(crate) fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

impl<'a> std::ops::Add<&'a RealQuad> for &'a RealQuad {
    type Output = RealQuad;
    fn add(self, rhs: &RealQuad) -> RealQuad {
        RealQuad::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl<'a> std::ops::Sub<&'a RealQuad> for &'a RealQuad {
    type Output = RealQuad;
    fn sub(self, rhs: &RealQuad) -> RealQuad {
        RealQuad::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl<'a> std::ops::Mul<&'a RealQuad> for &'a RealQuad {
    type Output = RealQuad;
    fn mul(self, rhs: &RealQuad) -> RealQuad {
        let three = Rational::from_integer(BigInt::from(3));
        RealQuad::new(
            &self.p * &rhs.p + &self.q * &rhs.q * three,
            &self.p * &rhs.q + &self.q * &rhs.p,
        )
    }
}

impl std::ops::Neg for &RealQuad {
    type Output = RealQuad;
    fn neg(self) -> RealQuad {
        RealQuad::new(-&self.p, -&self.q)
    }
}

forward_all!(RealQuad);

impl std::ops::Div<&RealQuad> for &RealQuad {
    type Output = RealQuad;
    fn div(self, rhs: &RealQuad) -> RealQuad {
        self * &rhs.inv()
    }
}

impl std::ops::Div<RealQuad> for RealQuad {
    type Output = RealQuad;
    fn div(self, rhs: RealQuad) -> RealQuad {
        &self * &rhs.inv()
    }
}

impl PartialOrd for RealQuad {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealQuad {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for RealQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => write!(f, "{}", self.p),
            (true, false) => write!(f, "({})√3", self.q),
            (false, false) => write!(f, "{} + ({})√3", self.p, self.q),
        }
    }
}

impl From<RealQuad> for [JsonInt; 4] {
    fn from(x: RealQuad) -> Self {
        let (pn, pd) = rational_parts(&x.p);
        let (qn, qd) = rational_parts(&x.q);
        [pn, qn, pd, qd]
    }
}

impl TryFrom<[JsonInt; 4]> for RealQuad {
    type Error = String;
    fn try_from([pn, qn, pd, qd]: [JsonInt; 4]) -> Result<Self, String> {
        Ok(RealQuad::new(rational_from(pn, pd)?, rational_from(qn, qd)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, rint};

    fn rq(p: Rational, q: Rational) -> RealQuad {
        RealQuad::new(p, q)
    }

    #[test]
    fn sign_examples() {
        // 27 - (57 - 24√3) = 24√3 - 30 > 0
        let lhs = RealQuad::from_int(27) - rq(rint(57), rint(-24));
        assert_eq!(lhs, rq(rint(-30), rint(24)));
        assert_eq!(lhs.sign(), 1);
        assert_eq!(RealQuad::zero().sign(), 0);
        // 2√3 - 2: compare 12 against 4
        assert_eq!(rq(rint(-2), rint(2)).sign(), 1);
        assert_eq!(rq(rint(2), rint(-2)).sign(), -1);
        assert_eq!(rq(rint(-7), rint(4)).sign(), -1); // 48 < 49
        assert_eq!(rq(rint(-6), rint(4)).sign(), 1);
    }

    #[test]
    fn sqrt_recognition() {
        assert_eq!(RealQuad::sqrt_of_rational(&rint(48)), Some(rq(rint(0), rint(4))));
        assert_eq!(RealQuad::sqrt_of_rational(&rat(9, 4)), Some(RealQuad::from_rational(rat(3, 2))));
        assert_eq!(RealQuad::sqrt_of_rational(&rint(2)), None);
    }

    #[test]
    fn floor_is_exact() {
        assert_eq!(rq(rint(-2), rint(2)).floor(), BigInt::from(1)); // 1.46
        assert_eq!(rq(rint(0), rint(-1)).floor(), BigInt::from(-2));
        assert_eq!(RealQuad::from_int(5).floor(), BigInt::from(5));
        assert_eq!(rq(rat(1, 2), rint(0)).floor(), BigInt::from(0));
    }

    #[test]
    fn inverse() {
        let x = rq(rint(9), rint(4));
        assert_eq!(&x * &x.inv(), RealQuad::one());
    }
}
