use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::json::JsonInt;
use super::ops::forward_all;
use super::{floor_rat, integer_window, mod3, CycloElem, Rational};

/// An Eisenstein integer `a + bω`, where `ω² = -1 - ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "[JsonInt; 2]", try_from = "[JsonInt; 2]")]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

/// `x` is not a multiple of the divisor.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{value} is not divisible by {divisor}")]
pub struct NotDivisible {
    pub value: EisensteinInt,
    pub divisor: EisensteinInt,
}

impl EisensteinInt {
    pub fn new(a: i64, b: i64) -> Self {
        EisensteinInt {
            a: BigInt::from(a),
            b: BigInt::from(b),
        }
    }

    pub fn from_parts(a: BigInt, b: BigInt) -> Self {
        EisensteinInt { a, b }
    }

    pub fn from_int(a: i64) -> Self {
        Self::new(a, 0)
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn omega() -> Self {
        Self::new(0, 1)
    }

    /// `ω̄ = ω² = -1 - ω`.
    pub fn omega_bar() -> Self {
        Self::new(-1, -1)
    }

    /// `θ = ω - ω̄ = 1 + 2ω = √-3`.
    pub fn theta() -> Self {
        Self::new(1, 2)
    }

    /// The six units `1, -1, ω, -ω, ω̄, -ω̄`, in that order.
    pub fn units() -> [EisensteinInt; 6] {
        [
            Self::new(1, 0),
            Self::new(-1, 0),
            Self::new(0, 1),
            Self::new(0, -1),
            Self::new(-1, -1),
            Self::new(1, 1),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// `conj(a + bω) = (a - b) - bω`.
    pub fn conj(&self) -> Self {
        EisensteinInt {
            a: &self.a - &self.b,
            b: -&self.b,
        }
    }

    /// `|a + bω|² = a² - ab + b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        EisensteinInt {
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    /// `self / d` when the quotient is integral.
    pub fn div_exact(&self, d: &EisensteinInt) -> Option<EisensteinInt> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let num = self * &d.conj();
        if num.a.is_multiple_of(&n) && num.b.is_multiple_of(&n) {
            Some(EisensteinInt {
                a: num.a / &n,
                b: num.b / &n,
            })
        } else {
            None
        }
    }

    pub fn is_divisible_by(&self, d: &EisensteinInt) -> bool {
        self.div_exact(d).is_some()
    }

    /// `self / θ`, or [`NotDivisible`] when `self ∉ θℰ`.
    pub fn div_by_theta(&self) -> Result<EisensteinInt, NotDivisible> {
        self.div_exact(&Self::theta()).ok_or_else(|| NotDivisible {
            value: self.clone(),
            divisor: Self::theta(),
        })
    }

    /// Image in `ℰ/θℰ ≅ 𝔽₃`. Since `ω ≡ 1 (mod θ)` this is `a + b mod 3`.
    pub fn residue_mod_theta(&self) -> u8 {
        mod3(&(&self.a + &self.b))
    }

    /// Image in `ℰ/3ℰ`, as `(a mod 3, b mod 3)`.
    pub fn residue_mod_3(&self) -> (u8, u8) {
        (mod3(&self.a), mod3(&self.b))
    }

    /// `2·Re` and `2·Im/√3`: `Re(a + bω) = a - b/2`, `Im = b√3/2`.
    fn doubled_coordinates(&self) -> (BigInt, BigInt) {
        (BigInt::from(2) * &self.a - &self.b, self.b.clone())
    }

    /// `{±1, ±ω, ±ω̄}·x`, ordered as [`EisensteinInt::units`]. Zero has the
    /// single associate 0.
    pub fn unit_associates(&self) -> Vec<EisensteinInt> {
        if self.is_zero() {
            return vec![Self::zero()];
        }
        Self::units().iter().map(|u| u * self).collect()
    }

    /// The associate maximising `(Re, Im)` lexicographically, together with
    /// the unit `u` such that `u·self` is that associate.
    pub fn canonical_associate(&self) -> (EisensteinInt, EisensteinInt) {
        if self.is_zero() {
            return (Self::zero(), Self::one());
        }
        Self::units()
            .into_iter()
            .map(|u| {
                let v = &u * self;
                (v, u)
            })
            .max_by(|(x, _), (y, _)| x.doubled_coordinates().cmp(&y.doubled_coordinates()))
            .expect("six units")
    }

    /// The Eisenstein integer nearest to `self / d` (`|remainder|² ≤ N(d)/3`).
    pub fn div_round(&self, d: &EisensteinInt) -> EisensteinInt {
        let q = CycloElem::from(self) * CycloElem::from(d).inv();
        q.nearest_integer()
    }

    /// All `w ∈ ℰ` with `|w - center|² ≤ radius_sq`, sorted.
    pub fn in_disk(center: &CycloElem, radius_sq: &Rational) -> Vec<EisensteinInt> {
        // |α + βω|² = (α - β/2)² + 3β²/4
        let mut out = Vec::new();
        let three_quarters = Rational::new(3.into(), 4.into());
        let half = Rational::new(1.into(), 2.into());
        let bwin = radius_sq / &three_quarters;
        let Some((blo, bhi)) = integer_window(&center.b, &bwin) else {
            return out;
        };
        let mut b = blo;
        while b <= bhi {
            let beta = Rational::from_integer(b.clone()) - &center.b;
            let rest = radius_sq - &three_quarters * &beta * &beta;
            if let Some((alo, ahi)) = integer_window(&(&center.a + &half * &beta), &rest) {
                let mut a = alo;
                while a <= ahi {
                    out.push(EisensteinInt::from_parts(a.clone(), b.clone()));
                    a += 1;
                }
            }
            b += 1;
        }
        out.sort();
        out
    }

    pub fn to_cyclo(&self) -> CycloElem {
        CycloElem::from(self)
    }

    pub fn re(&self) -> Rational {
        Rational::new(BigInt::from(2) * &self.a - &self.b, BigInt::from(2))
    }
}

impl From<&EisensteinInt> for CycloElem {
    fn from(x: &EisensteinInt) -> Self {
        CycloElem::new(
            Rational::from_integer(x.a.clone()),
            Rational::from_integer(x.b.clone()),
        )
    }
}

impl CycloElem {
    /// Nearest element of ℰ; ties broken towards the smaller `(a, b)`.
    pub fn nearest_integer(&self) -> EisensteinInt {
        let a0 = floor_rat(&self.a);
        let b0 = floor_rat(&self.b);
        let mut best: Option<(Rational, EisensteinInt)> = None;
        for da in 0..2 {
            for db in 0..2 {
                let cand = EisensteinInt::from_parts(&a0 + da, &b0 + db);
                let dist = (CycloElem::from(&cand) - self).norm();
                let better = match &best {
                    None => true,
                    Some((bd, bc)) => dist < *bd || (dist == *bd && cand < *bc),
                };
                if better {
                    best = Some((dist, cand));
                }
            }
        }
        best.expect("four candidates").1
    }
}

impl<'a> std::ops::Add<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> std::ops::Sub<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> std::ops::Mul<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², ω² = -1 - ω
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let cross = &self.a * &rhs.b + &self.b * &rhs.a;
        EisensteinInt {
            a: &ac - &bd,
            b: cross - bd,
        }
    }
}

impl std::ops::Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

forward_all!(EisensteinInt);

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}ω", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}ω", self.a, -&self.b)
                } else {
                    write!(f, "{}+{}ω", self.a, self.b)
                }
            }
        }
    }
}

impl From<EisensteinInt> for [JsonInt; 2] {
    fn from(x: EisensteinInt) -> Self {
        [JsonInt(x.a), JsonInt(x.b)]
    }
}

impl TryFrom<[JsonInt; 2]> for EisensteinInt {
    type Error = String;
    fn try_from([a, b]: [JsonInt; 2]) -> Result<Self, String> {
        Ok(EisensteinInt { a: a.0, b: b.0 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn omega_is_a_primitive_cube_root() {
        let w = EisensteinInt::omega();
        assert_eq!(&w * &w, EisensteinInt::omega_bar());
        assert_eq!(&(&w * &w) * &w, EisensteinInt::one());
        assert_eq!(w.conj(), EisensteinInt::omega_bar());
    }

    #[test]
    fn theta_squares_to_minus_three() {
        let t = EisensteinInt::theta();
        assert_eq!(&t * &t, e(-3, 0));
        assert_eq!(t.conj(), -&t);
        assert_eq!(t.norm(), BigInt::from(3));
        assert_eq!(&EisensteinInt::omega() - &EisensteinInt::omega_bar(), t);
    }

    #[test]
    fn norms() {
        assert_eq!(e(1, -1).norm(), BigInt::from(3));
        assert_eq!(e(2, 1).norm(), BigInt::from(3));
        assert_eq!(e(2, 0).norm(), BigInt::from(4));
    }

    #[test]
    fn divide_by_theta() {
        let t = EisensteinInt::theta();
        assert_eq!(e(3, 0).div_by_theta().unwrap(), -&t);
        assert_eq!(t.div_by_theta().unwrap(), EisensteinInt::one());
        assert!(EisensteinInt::one().div_by_theta().is_err());
    }

    #[test]
    fn residues_mod_theta_split_into_three_classes() {
        for a in -4..5 {
            for b in -4..5 {
                let x = e(a, b);
                let r = x.residue_mod_theta();
                assert_eq!(r == 0, x.div_by_theta().is_ok());
                if r != 0 {
                    // x is congruent to the unit ±1
                    let u = if r == 1 { e(1, 0) } else { e(-1, 0) };
                    assert!((&x - &u).div_by_theta().is_ok());
                }
            }
        }
    }

    #[test]
    fn associates() {
        let mut got = EisensteinInt::one().unit_associates();
        got.sort();
        let mut want = EisensteinInt::units().to_vec();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(EisensteinInt::zero().unit_associates(), vec![EisensteinInt::zero()]);
        assert_eq!(EisensteinInt::one().canonical_associate().0, EisensteinInt::one());
    }

    #[test]
    fn canonical_associate_matches_enumeration() {
        // oracle: compare the six associates by (2Re, 2Im/√3) directly
        let theta = EisensteinInt::theta();
        let minus_theta = -&theta;
        let assoc = minus_theta.unit_associates();
        let best = assoc
            .iter()
            .max_by_key(|x| (BigInt::from(2) * &x.a - &x.b, x.b.clone()))
            .unwrap()
            .clone();
        let (canon, u) = minus_theta.canonical_associate();
        assert_eq!(canon, best);
        assert_eq!(&u * &minus_theta, canon);
        // max Re is 3/2, attained by 2 + ω and 1 - ω; the larger Im wins
        assert_eq!(canon, e(2, 1));
    }

    #[test]
    fn disk_matches_brute_force() {
        let c = CycloElem::new(Rational::new(1.into(), 3.into()), Rational::new((-5).into(), 7.into()));
        for r in [0i64, 1, 2, 3, 7] {
            let r = Rational::from_integer(r.into());
            let got = EisensteinInt::in_disk(&c, &r);
            let want: Vec<_> = (-6..7)
                .flat_map(|a| (-6..7).map(move |b| e(a, b)))
                .filter(|w| (CycloElem::from(w) - &c).norm() <= r)
                .collect();
            let mut want = want;
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn rounding_division_has_small_remainder() {
        for (x, d) in [(e(17, -5), e(2, 1)), (e(-9, 4), e(3, 0)), (e(5, 5), e(1, 3))] {
            let q = x.div_round(&d);
            let r = &x - &(&q * &d);
            assert!(BigInt::from(3) * r.norm() <= d.norm());
        }
    }
}
