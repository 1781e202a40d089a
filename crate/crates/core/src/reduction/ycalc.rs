//! The parameter `y = (θ/|m|²)⟨p, l⟩` attached to a root `s` and a Leech
//! root `l`, and the two squared ratios that decide whether the triflection
//! in `l` lowers `s`.

use serde::{Deserialize, Serialize};

use crate::field::{rat, FieldElem, RealQuad};
use crate::lorentz::{ip, Decomposition, LeechRootSpec, Zeta};

/// `y = -3/|m|² + ⟨s, l⟩/m`.
pub fn y_param(dec: &Decomposition, l: &LeechRootSpec) -> FieldElem {
    let s = crate::lorentz::recompose(dec);
    let m_sq = FieldElem::from(&dec.m_sq());
    -(FieldElem::from_int(3) / m_sq) + ip(&s, &l.vector()) / dec.m.clone()
}

/// The same quantity expanded through the `(σ, m, N, ν)` form:
/// `-3/(2|m|²) + 3/2 - ½(σ/m - λ)² + Im⟨σ/m, λ⟩ + 3(ν_l - ν/|m|²)`.
pub fn y_formula(dec: &Decomposition, l: &LeechRootSpec) -> FieldElem {
    let m_sq = FieldElem::from(&dec.m_sq());
    let m_inv = dec.m.inv();
    let shifted: [FieldElem; 12] = std::array::from_fn(|i| &dec.sigma[i] * &m_inv);
    let lam: [FieldElem; 12] = std::array::from_fn(|i| FieldElem::from(&l.lambda.coords[i]));
    let diff: [FieldElem; 12] = std::array::from_fn(|i| &shifted[i] - &lam[i]);
    let inner = |a: &[FieldElem; 12], b: &[FieldElem; 12]| {
        let mut acc = FieldElem::zero();
        for (x, y) in a.iter().zip(b) {
            acc += x * &y.conj();
        }
        acc.scale(&rat(1, 3))
    };
    let dist_sq = inner(&diff, &diff);
    let three = FieldElem::from_int(3);
    -(FieldElem::from_rational(rat(3, 2)) / m_sq.clone()) + FieldElem::from_rational(rat(3, 2)) - dist_sq.scale(&rat(1, 2))
        + inner(&shifted, &lam).im_part()
        + three * (&l.nu_l - &(&dec.nu / &m_sq))
}

/// `y ∈ -3/|m|² + (θ/m)ℰ`.
pub fn y_in_lattice(y: &FieldElem, m: &FieldElem) -> bool {
    let shifted = y + &(FieldElem::from_int(3) / FieldElem::from(&m.abs_sq()));
    (shifted * m.clone() / FieldElem::theta()).is_integral()
}

/// `|⅓(1 - ζ̄)y - 1|² = |⟨p, R(ρ)⟩ / ⟨p, ρ⟩|²`; below 1 exactly when
/// `|y - (1 - ζ)|² < 3`.
pub fn ratio_p_sq(y: &FieldElem, zeta: Zeta) -> RealQuad {
    let c = (FieldElem::one() - zeta.value().conj()).scale(&rat(1, 3));
    (c * y - FieldElem::one()).abs_sq()
}

/// `|1 - ⅓(1 - ζ̄)(3/|m|² + y)|² = |⟨s, R(ρ)⟩ / ⟨s, ρ⟩|²`, the factor by which
/// the triflection changes the height `|⟨ρ, s⟩|²`.
pub fn ratio_mirror_sq(y: &FieldElem, m_sq: &RealQuad, zeta: Zeta) -> RealQuad {
    let c = (FieldElem::one() - zeta.value().conj()).scale(&rat(1, 3));
    let shifted = y + &(FieldElem::from_int(3) / FieldElem::from(m_sq));
    (FieldElem::one() - c * shifted).abs_sq()
}

/// `|y - (1 - ζ)|²`.
pub fn disk_dist_sq(y: &FieldElem, zeta: Zeta) -> RealQuad {
    (y - &(FieldElem::one() - zeta.value())).abs_sq()
}

/// Position of `y` relative to `V`, the union of the open `√3`-disks about
/// `1 - ω` and `1 - ω̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "region", content = "zeta")]
pub enum RegionClass {
    Inside(Zeta),
    Boundary(Zeta),
    Outside,
}

/// Classifies `y`; when both disks qualify the one with the smaller
/// `ratio_p_sq` wins, ties to `ω`.
pub fn in_region_v(y: &FieldElem) -> RegionClass {
    let three = RealQuad::from_int(3);
    let dw = disk_dist_sq(y, Zeta::Omega);
    let db = disk_dist_sq(y, Zeta::OmegaBar);
    // ratio_p_sq = |y - (1 - ζ)|²/3, so comparing distances compares ratios
    let best = if db < dw { Zeta::OmegaBar } else { Zeta::Omega };
    let d = if best == Zeta::Omega { &dw } else { &db };
    if *d < three {
        RegionClass::Inside(best)
    } else if *d == three {
        RegionClass::Boundary(best)
    } else {
        RegionClass::Outside
    }
}

/// The rectangle `Re y ∈ [-δ, 3/2 - δ]`, `Im y ∈ [-θ/2, θ/2]` with
/// `δ = 3/(2|m|²)`, and the excluded disk `|y + 2δ|² ≥ 3/|m|²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectangleCheck {
    pub re_in_range: bool,
    pub im_in_range: bool,
    pub outside_disk: bool,
}

impl RectangleCheck {
    pub fn all(&self) -> bool {
        self.re_in_range && self.im_in_range && self.outside_disk
    }
}

pub fn rectangle_check(y: &FieldElem, m_sq: &RealQuad) -> RectangleCheck {
    let delta = RealQuad::from_rational(rat(3, 2)) / m_sq.clone();
    let re = y.re_part();
    let im = y.im_over_theta();
    let half = RealQuad::from_rational(rat(1, 2));
    let two_delta = FieldElem::from(&(&delta + &delta));
    RectangleCheck {
        re_in_range: -delta.clone() <= re && re <= &RealQuad::from_rational(rat(3, 2)) - &delta,
        im_in_range: -half.clone() <= im && im <= half,
        outside_disk: (y + &two_delta).abs_sq() >= RealQuad::from_int(3) / m_sq.clone(),
    }
}
