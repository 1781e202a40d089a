//! Corners of the region that `y` is confined to, checked against the disk
//! `|y - (1 - ω)|² < 3`, and the extra excluded disks that cover the gap
//! when `|m|² = 4`.
//!
//! With `δ = 3/(2|m|²)` the lower half of the region is the rectangle
//! `Re y ∈ [-δ, 3/2 - δ]`, `Im y ∈ [-√3/2, 0]` minus the open disk of radius²
//! `3/|m|² = 2δ` about `-2δ`. The upper half is its mirror image and is
//! handled by the disk about `1 - ω̄`. The corners are
//! `v₁ = -2δ + √(2δ)`, `v₂ = 3/2 - δ`, `v₃ = 3/2 - δ - i√3/2`,
//! `v₄ = -δ - i√3/2` and `v₅ = -δ - i√(2δ - δ²)`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::field::{rat, rint, Rational, Surd};

/// Squared distance to `1 - ω` compared with 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerClass {
    Inside,
    Boundary,
    Outside,
}

impl CornerClass {
    fn from_sign(s: i8) -> Self {
        match s {
            -1 => CornerClass::Inside,
            0 => CornerClass::Boundary,
            _ => CornerClass::Outside,
        }
    }
}

/// A point `re + i·im` where `im` is a pure radical `b√e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerPoint {
    pub re: Surd,
    pub im: Surd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerReport {
    pub name: String,
    pub point: CornerPoint,
    /// `|v - (1 - ω)|² - 3`, exact with a single radical.
    pub excess: Surd,
    pub class: CornerClass,
}

/// One convex piece of the uncovered part of the rectangle, with the
/// excluded disk that should contain it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullPiece {
    /// Disk center `cx + i·cy√3`.
    #[serde(with = "crate::field::json::rational")]
    pub center_re: Rational,
    #[serde(with = "crate::field::json::rational")]
    pub center_im_over_sqrt3: Rational,
    #[serde(with = "crate::field::json::rational")]
    pub radius_sq: Rational,
    pub vertices: Vec<HullVertex>,
    pub all_inside: bool,
}

/// A vertex `re + i·k√3`, with `|vertex - center|² - radius²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullVertex {
    pub re: Surd,
    #[serde(with = "crate::field::json::rational")]
    pub im_over_sqrt3: Rational,
    pub excess: Surd,
}

/// For `|m|² = 4`: the part of the lower rectangle outside the disk about
/// `1 - ω`, split at `Im y = -√3/4`, lies in the open disks of radius `√3/2`
/// about `-3/4` and `-3/4 - θ/2`.
///
/// Each piece is bounded by the left edge `Re y = -δ` and an arc of the
/// circle `|y - (1 - ω)|² = 3`. That arc bulges toward the left edge, so the
/// piece lies in the quadrilateral spanned by the edge and the chord, and a
/// convex polygon lies in an open disk once its vertices do.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedDiskCertificate {
    pub pieces: Vec<HullPiece>,
    /// The chord endpoints lie strictly right of the left edge, so the
    /// quadrilaterals are as described.
    pub shape_ok: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionCornerReport {
    pub m_sq: i64,
    #[serde(with = "crate::field::json::rational")]
    pub delta: Rational,
    pub corners: Vec<CornerReport>,
    pub excluded_disks: Option<ExcludedDiskCertificate>,
}

impl RegionCornerReport {
    pub fn class_of(&self, name: &str) -> Option<CornerClass> {
        self.corners.iter().find(|c| c.name == name).map(|c| c.class)
    }

    pub fn all_inside(&self) -> bool {
        self.corners.iter().all(|c| c.class == CornerClass::Inside)
    }
}

fn three() -> BigInt {
    BigInt::from(3)
}

/// `|re + i·im - (3/2 - i√3/2)|² - 3`; at most one of the two parts may
/// carry a radical other than `√3`.
fn excess_to_lower_disk(p: &CornerPoint) -> Surd {
    assert!(p.im.a.is_zero(), "imaginary part must be a pure radical");
    let dx = p.re.add_rational(&rat(-3, 2)).square();
    let dy = if p.im.is_rational() || p.im.e == three() {
        // (b√3 + √3/2)² = 3(b + ½)²
        let b = if p.im.is_rational() { Rational::zero() } else { p.im.b.clone() };
        let c = b + rat(1, 2);
        Surd::rational(rint(3) * &c * &c)
    } else {
        // (b√e + √3/2)² = b²e + 3/4 + b√(3e)
        let e = Rational::from_integer(p.im.e.clone());
        Surd::new(&p.im.b * &p.im.b * e + rat(3, 4), p.im.b.clone(), &p.im.e * three())
    };
    let total = if dx.is_rational() {
        dy.add_rational(&dx.a)
    } else {
        assert!(dy.is_rational(), "two distinct radicals");
        dx.add_rational(&dy.a)
    };
    total.add_rational(&rint(-3))
}

fn corner(name: &str, re: Surd, im: Surd) -> CornerReport {
    let point = CornerPoint { re, im };
    let excess = excess_to_lower_disk(&point);
    let class = CornerClass::from_sign(excess.sign());
    CornerReport { name: name.into(), point, excess, class }
}

/// Exact corner table for a given `|m|² ≥ 3`.
pub fn verify_region_corners(m_sq: i64) -> RegionCornerReport {
    assert!(m_sq >= 3, "corner table needs |m|² ≥ 3");
    let delta = rat(3, 2 * m_sq);
    let two_delta = &delta + &delta;
    let half_sqrt3 = Surd::new(Rational::zero(), rat(-1, 2), three());
    let v1 = Surd::sqrt_of(&two_delta).add_rational(&-&two_delta);
    let v5_im = Surd::sqrt_of(&(&two_delta - &delta * &delta)).scale(&rint(-1));
    let corners = vec![
        corner("v1", v1, Surd::rational(Rational::zero())),
        corner("v2", Surd::rational(rat(3, 2) - &delta), Surd::rational(Rational::zero())),
        corner("v3", Surd::rational(rat(3, 2) - &delta), half_sqrt3.clone()),
        corner("v4", Surd::rational(-delta.clone()), half_sqrt3),
        corner("v5", Surd::rational(-delta.clone()), v5_im),
    ];
    let excluded_disks = (m_sq == 4).then(|| excluded_disk_certificate(&delta));
    RegionCornerReport { m_sq, delta, corners, excluded_disks }
}

/// `Re` of the left intersection of `|y - (1 - ω)|² = 3` with
/// `Im y = k√3`: `3/2 - √(3 - 3(k + ½)²)`.
fn arc_left(k: &Rational) -> Surd {
    let c = k + rat(1, 2);
    Surd::sqrt_of(&(rint(3) - rint(3) * &c * &c)).scale(&rint(-1)).add_rational(&rat(3, 2))
}

fn hull_piece(center_re: Rational, center_k: Rational, radius_sq: Rational, vertices: Vec<(Surd, Rational)>) -> HullPiece {
    let vertices: Vec<HullVertex> = vertices
        .into_iter()
        .map(|(re, k)| {
            let dk = &k - &center_k;
            let excess = re.add_rational(&-&center_re).square().add_rational(&(rint(3) * &dk * &dk - &radius_sq));
            HullVertex { re, im_over_sqrt3: k, excess }
        })
        .collect();
    let all_inside = vertices.iter().all(|v| v.excess.sign() < 0);
    HullPiece { center_re, center_im_over_sqrt3: center_k, radius_sq, vertices, all_inside }
}

fn excluded_disk_certificate(delta: &Rational) -> ExcludedDiskCertificate {
    let two_delta = delta + delta;
    let left = Surd::rational(-delta.clone());
    let (top, mid, bottom) = (Rational::zero(), rat(-1, 4), rat(-1, 2));
    let mid_arc = arc_left(&mid);
    let bottom_arc = arc_left(&bottom);
    let upper = hull_piece(
        -two_delta.clone(),
        Rational::zero(),
        two_delta.clone(),
        vec![(left.clone(), top.clone()), (arc_left(&top), top), (left.clone(), mid.clone()), (mid_arc.clone(), mid.clone())],
    );
    let lower = hull_piece(
        -two_delta.clone(),
        rat(-1, 2),
        two_delta.clone(),
        vec![(left.clone(), mid.clone()), (left.clone(), bottom.clone()), (bottom_arc.clone(), bottom), (mid_arc.clone(), mid)],
    );
    let right_of = |s: &Surd| s.add_rational(delta).sign() > 0;
    let shape_ok = right_of(&arc_left(&Rational::zero())) && right_of(&mid_arc) && right_of(&bottom_arc);
    let holds = shape_ok && upper.all_inside && lower.all_inside;
    ExcludedDiskCertificate { pieces: vec![upper, lower], shape_ok, holds }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_m_all_inside() {
        for m_sq in [8, 9, 12, 13] {
            let r = verify_region_corners(m_sq);
            assert!(r.all_inside(), "{m_sq}: {r:?}");
            assert!(r.excluded_disks.is_none());
        }
    }

    #[test]
    fn seven_puts_v5_on_the_boundary() {
        let r = verify_region_corners(7);
        for v in ["v1", "v2", "v3", "v4"] {
            assert_eq!(r.class_of(v), Some(CornerClass::Inside), "{v}");
        }
        assert_eq!(r.class_of("v5"), Some(CornerClass::Boundary));
    }

    #[test]
    fn four_needs_the_extra_disks() {
        let r = verify_region_corners(4);
        assert_eq!(r.class_of("v4"), Some(CornerClass::Outside));
        assert_eq!(r.class_of("v5"), Some(CornerClass::Outside));
        let cert = r.excluded_disks.unwrap();
        assert!(cert.holds, "{cert:?}");
        assert_eq!(cert.pieces[0].center_re, rat(-3, 4));
        assert_eq!(cert.pieces[0].radius_sq, rat(3, 4));
        // (3/2 - 3√5/4, -√3/4) sits at squared distance (129 - 54√5)/16
        let v = &cert.pieces[0].vertices[3];
        // 117/16 - (9/32)√720 = (129 - 54√5)/16 - 12/16
        assert_eq!(v.excess, Surd::new(rat(117, 16), rat(-9, 32), BigInt::from(720)));
    }

    #[test]
    fn three_puts_v1_on_the_boundary() {
        let r = verify_region_corners(3);
        assert_eq!(r.class_of("v1"), Some(CornerClass::Boundary));
    }
}
