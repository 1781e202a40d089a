use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;

/// A real number `a + b√e` with rational `a`, `b` and a nonnegative integer
/// radicand `e`, which need not be squarefree.
///
/// Used where a second quadratic radical appears next to `√3`, such as the
/// corners of the fundamental region for a given `|m|²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Surd {
    #[serde(with = "super::json::rational")]
    pub a: Rational,
    #[serde(with = "super::json::rational")]
    pub b: Rational,
    #[serde(with = "super::json::bigint")]
    pub e: BigInt,
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

impl Surd {
    /// Panics if `e < 0`.
    pub fn new(a: Rational, b: Rational, e: BigInt) -> Self {
        assert!(!e.is_negative(), "negative radicand");
        Surd { a, b, e }
    }

    pub fn rational(a: Rational) -> Self {
        Surd::new(a, Rational::zero(), BigInt::zero())
    }

    /// `√r = √(pq)/q` for `r = p/q ≥ 0`.
    pub fn sqrt_of(r: &Rational) -> Self {
        assert!(!r.is_negative(), "square root of a negative rational");
        let q = r.denom().clone();
        Surd::new(Rational::zero(), Rational::new(BigInt::from(1), q.clone()), r.numer() * q)
    }

    /// `(a + b√e)² = a² + b²e + 2ab√e`.
    pub fn square(&self) -> Self {
        let e = Rational::from_integer(self.e.clone());
        Surd::new(&self.a * &self.a + &self.b * &self.b * e, Rational::from_integer(BigInt::from(2)) * &self.a * &self.b, self.e.clone())
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        Surd::new(&self.a + r, self.b.clone(), self.e.clone())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Surd::new(&self.a * r, &self.b * r, self.e.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() || self.e.is_zero()
    }

    /// Exact sign, by comparing `a²` with `b²e` when the terms disagree.
    pub fn sign(&self) -> i8 {
        let sa = rsign(&self.a);
        let sb = if self.e.is_zero() { 0 } else { rsign(&self.b) };
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let aa = &self.a * &self.a;
        let bbe = &self.b * &self.b * Rational::from_integer(self.e.clone());
        match aa.cmp(&bbe) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    /// Sign of `self - other`; both must share the radicand.
    pub fn cmp_same_radicand(&self, other: &Surd) -> Ordering {
        assert_eq!(self.e, other.e, "radicands differ");
        Surd::new(&self.a - &other.a, &self.b - &other.b, self.e.clone())
            .sign()
            .cmp(&0)
    }

    /// A decimal approximation for human-readable reports only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        let e = self.e.to_f64().unwrap_or(f64::NAN);
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * e.sqrt()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() || self.e.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + ({})√{}", self.a, self.b, self.e)
        }
    }
}
