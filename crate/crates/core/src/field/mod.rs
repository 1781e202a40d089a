//! Exact arithmetic in ℚ, ℤ[ω], ℚ(ω) and the real-quadratic tower ℚ(ω)(√3).
//!
//! Every scalar that appears in the lattice and reduction code lives in one of
//! these types. Nothing here touches floating point: real quantities are
//! compared through [`RealQuad::sign`] (or [`Surd::sign`] when a second radical
//! shows up), which decides the sign of `p + q√r` by comparing squares.

mod cyclo;
mod eisenstein;
mod ops;
mod quad;
mod real_quad;
mod surd;

pub use cyclo::CycloElem;
pub use eisenstein::{EisensteinInt, NotDivisible};
pub use quad::FieldElem;
pub use real_quad::RealQuad;
pub use surd::Surd;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// `n / d` as a [`Rational`]. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Largest integer `k` with `k <= x`.
pub(crate) fn floor_rat(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// Smallest integer `k` with `k >= x`.
pub(crate) fn ceil_rat(x: &Rational) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

/// Largest integer `k` with `k² <= x` for `x >= 0`.
pub(crate) fn floor_sqrt_rat(x: &Rational) -> BigInt {
    if !x.is_positive() {
        return BigInt::zero();
    }
    // floor(sqrt(n/d)) = floor(sqrt(n*d) / d) = floor(isqrt(n*d) / d)
    let nd = x.numer() * x.denom();
    nd.sqrt().div_floor(x.denom())
}

/// Integers `k` with `(k - center)² <= radius_sq`, as an inclusive range.
pub(crate) fn integer_window(center: &Rational, radius_sq: &Rational) -> Option<(BigInt, BigInt)> {
    if radius_sq.is_negative() {
        return None;
    }
    // Start from a safe outer estimate and tighten exactly.
    let slack = floor_sqrt_rat(radius_sq) + BigInt::one();
    let mut lo = floor_rat(center) - &slack;
    let mut hi = ceil_rat(center) + &slack;
    let fits = |k: &BigInt| {
        let d = Rational::from_integer(k.clone()) - center;
        &(&d * &d) <= radius_sq
    };
    while lo <= hi && !fits(&lo) {
        lo += 1;
    }
    while hi >= lo && !fits(&hi) {
        hi -= 1;
    }
    if lo > hi {
        None
    } else {
        Some((lo, hi))
    }
}

/// Residue of an integer modulo 3 in `{0, 1, 2}`.
pub(crate) fn mod3(x: &BigInt) -> u8 {
    let r = x.mod_floor(&BigInt::from(3));
    if r.is_zero() {
        0
    } else if r.is_one() {
        1
    } else {
        2
    }
}

pub mod json {
    //! Exact JSON encodings. Integers are JSON numbers when they fit in an
    //! `i64` and decimal strings otherwise; nothing is ever written as a float.

    use num_bigint::BigInt;
    use serde::de::{self, Visitor};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::fmt;

    /// A big integer with an exact JSON encoding.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct JsonInt(pub BigInt);

    impl Serialize for JsonInt {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            match i64::try_from(&self.0) {
                Ok(v) => s.serialize_i64(v),
                Err(_) => s.serialize_str(&self.0.to_string()),
            }
        }
    }

    struct IntVisitor;

    impl<'de> Visitor<'de> for IntVisitor {
        type Value = JsonInt;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("an integer or a decimal integer string")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
            Ok(JsonInt(BigInt::from(v)))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
            Ok(JsonInt(BigInt::from(v)))
        }

        fn visit_f64<E: de::Error>(self, v: f64) -> Result<JsonInt, E> {
            Err(E::custom(format!("decimal number {v} is not an exact integer encoding")))
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
            v.trim()
                .parse::<BigInt>()
                .map(JsonInt)
                .map_err(|_| E::custom(format!("invalid integer string {v:?}")))
        }
    }

    impl<'de> Deserialize<'de> for JsonInt {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            d.deserialize_any(IntVisitor)
        }
    }

    /// `#[serde(with)]` adapter writing a rational as `[num, den]`.
    pub mod rational {
        use super::{rational_from, rational_parts, JsonInt};
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(r: &crate::field::Rational, s: S) -> Result<S::Ok, S::Error> {
            let (n, d) = rational_parts(r);
            [n, d].serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<crate::field::Rational, D::Error> {
            let [n, den] = <[JsonInt; 2]>::deserialize(d)?;
            rational_from(n, den).map_err(serde::de::Error::custom)
        }
    }

    /// `#[serde(with)]` adapter for a big integer.
    pub mod bigint {
        use super::JsonInt;
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(n: &num_bigint::BigInt, s: S) -> Result<S::Ok, S::Error> {
            JsonInt(n.clone()).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<num_bigint::BigInt, D::Error> {
            Ok(JsonInt::deserialize(d)?.0)
        }
    }

    pub(crate) fn rational_parts(r: &super::Rational) -> (JsonInt, JsonInt) {
        (JsonInt(r.numer().clone()), JsonInt(r.denom().clone()))
    }

    pub(crate) fn rational_from(num: JsonInt, den: JsonInt) -> Result<super::Rational, String> {
        if num_traits::Zero::is_zero(&den.0) {
            return Err("zero denominator".into());
        }
        Ok(super::Rational::new(num.0, den.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_window_is_exact() {
        // (k - 1/2)^2 <= 9/4  =>  k in [-1, 2]
        let (lo, hi) = integer_window(&rat(1, 2), &rat(9, 4)).unwrap();
        assert_eq!((lo, hi), (BigInt::from(-1), BigInt::from(2)));
        assert!(integer_window(&rat(1, 2), &rat(1, 5)).is_none());
        let (lo, hi) = integer_window(&rint(3), &rint(0)).unwrap();
        assert_eq!((lo, hi), (BigInt::from(3), BigInt::from(3)));
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(floor_rat(&rat(-7, 2)), BigInt::from(-4));
        assert_eq!(ceil_rat(&rat(-7, 2)), BigInt::from(-3));
        assert_eq!(floor_sqrt_rat(&rat(10, 1)), BigInt::from(3));
        assert_eq!(floor_sqrt_rat(&rat(1, 4)), BigInt::from(0));
        assert_eq!(floor_sqrt_rat(&rat(9, 4)), BigInt::from(1));
    }
}
