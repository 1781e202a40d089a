//! The ball-overlap certificate for roots `(σ₀; θ, -1)` with `σ₀² = 9`.
//!
//! Here no Leech triflection moves `ρ` closer to the projection point `p`,
//! so the step works through a ball `U` about `p` instead: a point `x` of
//! `s⊥ ∩ ∂U` inside `R(B)`, and the point `y` where the geodesic from `x`
//! toward `ρ` meets `∂B`, which is inside `R(B) ∩ U`.

use serde::{Deserialize, Serialize};

use super::ReductionError;
use crate::field::{rat, FieldElem, RealQuad};
use crate::lorentz::{cosh_sq_dist, height, in_lattice, ip, project_to_mirror, triflection, AmbientVector, Root, Zeta};

/// Every exact quantity of the construction, in the order it is derived.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapWitness {
    /// Projection of `ρ` to `s⊥`; lies in L.
    pub p: AmbientVector,
    /// `ht_ρ(p)`, the height of the horoball `B`.
    pub horoball_height: RealQuad,
    /// `sinh²` of the radius of `U`, equal to `-1/p²`.
    pub sinh_sq_radius: RealQuad,
    pub r_rho: AmbientVector,
    /// Projection of `R(ρ)` to `s⊥`.
    pub p_prime: AmbientVector,
    pub cosh_sq_p_p_prime: RealQuad,
    /// `c` with `x_t = c·p' + t·p`, so that `⟨c p', p⟩ < 0`.
    pub direction: FieldElem,
    pub t: RealQuad,
    pub x: AmbientVector,
    pub height_r_rho_x: RealQuad,
    pub u: RealQuad,
    pub y: AmbientVector,
    pub height_rho_y: RealQuad,
    pub height_r_rho_y: RealQuad,
    pub cosh_sq_y_p: RealQuad,
}

fn fail(msg: impl Into<String>) -> ReductionError {
    ReductionError::CertificateFailed(msg.into())
}

fn real(x: FieldElem, what: &str) -> Result<RealQuad, ReductionError> {
    x.to_real().ok_or_else(|| fail(format!("{what} is not real")))
}

/// Runs the construction for the mirror of `s` and the triflection `R_{l,ζ}`,
/// checking every inequality exactly.
pub fn certify_ball_overlap(s: &Root, l: &Root, zeta: Zeta) -> Result<OverlapWitness, ReductionError> {
    let rho = AmbientVector::rho();
    let p = project_to_mirror(&rho, s);
    if !in_lattice(&p) {
        return Err(fail(format!("p = {p} is not in L")));
    }
    let p_sq = p.norm();
    if !p_sq.is_negative() {
        return Err(fail("p is not a point of complex hyperbolic space"));
    }
    let h = height(&rho, &p)?;
    // ⟨p, s'⟩ ∈ θℰ for p, s' ∈ L, so every mirror meeting U passes through p
    let r = -(p_sq.inv());
    let one_r = &RealQuad::one() + &r;
    let r_rho = triflection(l, zeta, &rho);
    let p_prime = project_to_mirror(&r_rho, s);
    let cosh_pp = cosh_sq_dist(&p, &p_prime)?;
    if cosh_pp <= one_r {
        return Err(fail("p' is not outside U"));
    }
    // halving gives the parametrization with ⟨x₀, p⟩ = -6 at the model root
    let direction = -(ip(&p, &p_prime).scale(&rat(1, 2)));
    let base = p_prime.scale(&direction);
    let a = real(ip(&base, &p), "<c p', p>")?;
    if !a.is_negative() {
        return Err(fail("<c p', p> is not negative"));
    }
    let big_a = base.norm();
    // cosh²(x_t, p) = 1 + r  ⇔  -r P² t² - 2 r a P t + a² - (1 + r) P A = 0
    let alpha = -(&r * &p_sq * &p_sq);
    let beta = -(RealQuad::from_int(2) * &r * &a * &p_sq);
    let gamma = &a * &a - &one_r * &p_sq * &big_a;
    let disc = &beta * &beta - RealQuad::from_int(4) * &alpha * &gamma;
    if !disc.is_rational() {
        return Err(fail(format!("discriminant {disc} leaves Q(√3)")));
    }
    let sqrt_disc = RealQuad::sqrt_of_rational(&disc.p).ok_or_else(|| fail(format!("no square root of {disc} in Q(√3)")))?;
    let two_alpha = RealQuad::from_int(2) * &alpha;
    let roots = [(-&beta + &sqrt_disc) / two_alpha.clone(), (-&beta - &sqrt_disc) / two_alpha];
    let nonneg: Vec<&RealQuad> = roots.iter().filter(|t| !t.is_negative()).collect();
    let t = match nonneg.as_slice() {
        [t] => (*t).clone(),
        [t1, t2] if t1 == t2 => (*t1).clone(),
        _ => return Err(fail(format!("expected one nonnegative crossing, found {}", nonneg.len()))),
    };
    let x = &base + &p.scale(&FieldElem::from(&t));
    if !ip(&x, s.vector()).is_zero() {
        return Err(fail("x is not on the mirror"));
    }
    if cosh_sq_dist(&x, &p)? != one_r {
        return Err(fail("x is not on the boundary of U"));
    }
    let height_r_rho_x = height(&r_rho, &x)?;
    if height_r_rho_x >= h {
        return Err(fail(format!("ht_R(rho)(x) = {height_r_rho_x} is not below {h}")));
    }
    let x_rho = ip(&x, &rho);
    let re_x_rho = x_rho.re_part();
    if !re_x_rho.is_negative() || !x_rho.is_real() {
        return Err(fail("<x, rho> is not negative real"));
    }
    // y_u = x + uρ has ⟨y_u, ρ⟩ = ⟨x, ρ⟩ and y_u² = x² + 2u Re⟨x, ρ⟩
    let u = (-(x_rho.abs_sq() / h.clone()) - x.norm()) / (RealQuad::from_int(2) * &re_x_rho);
    if u.is_negative() {
        return Err(fail("the geodesic from x meets the horosphere behind x"));
    }
    let y = &x + &rho.scale(&FieldElem::from(&u));
    let height_rho_y = height(&rho, &y)?;
    if height_rho_y != h {
        return Err(fail("y is not on the boundary of B"));
    }
    let height_r_rho_y = height(&r_rho, &y)?;
    if height_r_rho_y >= h {
        return Err(fail(format!("ht_R(rho)(y) = {height_r_rho_y} is not below {h}")));
    }
    let cosh_sq_y_p = cosh_sq_dist(&y, &p)?;
    if cosh_sq_y_p >= one_r {
        return Err(fail("y is not inside U"));
    }
    Ok(OverlapWitness {
        p,
        horoball_height: h,
        sinh_sq_radius: r,
        r_rho,
        p_prime,
        cosh_sq_p_p_prime: cosh_pp,
        direction,
        t,
        x,
        height_r_rho_x,
        u,
        y,
        height_rho_y,
        height_r_rho_y,
        cosh_sq_y_p,
    })
}

/// Checks a recorded witness against a fresh derivation from `(s, l, ζ)`.
pub fn verify_overlap_witness(s: &Root, l: &Root, zeta: Zeta, w: &OverlapWitness) -> Result<(), ReductionError> {
    let fresh = certify_ball_overlap(s, l, zeta)?;
    if fresh != *w {
        return Err(fail("recorded overlap witness differs from the derivation"));
    }
    Ok(())
}

/// One named constant of the model computation with its expected value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantCheck {
    pub name: String,
    pub computed: String,
    pub expected: String,
    pub matches: bool,
}

fn check<T: PartialEq + std::fmt::Display>(name: &str, computed: &T, expected: &T) -> ConstantCheck {
    ConstantCheck {
        name: name.into(),
        computed: computed.to_string(),
        expected: expected.to_string(),
        matches: computed == expected,
    }
}

fn holds(name: &str, computed: &RealQuad, bound: &RealQuad, ok: bool, rel: &str) -> ConstantCheck {
    ConstantCheck {
        name: name.into(),
        computed: computed.to_string(),
        expected: format!("{rel} {bound}"),
        matches: ok,
    }
}

/// The model root `(λ₉; θ, -1)` and Leech root `(0; 1, -ω)`.
pub fn model_roots() -> (Root, Root) {
    use crate::field::EisensteinInt;
    use crate::leech::LeechPoint;
    let s = Root::integral(&LeechPoint::lambda9(), EisensteinInt::theta(), EisensteinInt::from_int(-1)).expect("model root");
    let l = Root::integral(&LeechPoint::zero(), EisensteinInt::one(), -EisensteinInt::omega()).expect("model Leech root");
    (s, l)
}

/// Every constant of the model computation next to its closed form.
pub fn overlap_constants() -> Result<Vec<ConstantCheck>, ReductionError> {
    let (s, l) = model_roots();
    let w = certify_ball_overlap(&s, &l, Zeta::Omega)?;
    let rho = AmbientVector::rho();
    let q = |p: i64, r: i64| RealQuad::new(rat(p, 1), rat(r, 1));
    let three = RealQuad::from_int(3);
    let sqrt3 = RealQuad::sqrt3();
    let t = w.t.clone();
    let x_t_p = real(ip(&w.x, &w.p), "<x, p>")?;
    let rrho_x = ip(&w.r_rho, &w.x);
    let expected_rrho_x = FieldElem::omega_bar() * FieldElem::theta().conj() * FieldElem::from(&q(-3, 4));
    let ht_y_formula = RealQuad::from_int(36) / (RealQuad::from_int(9) + RealQuad::from_int(4) * &w.u * &sqrt3);
    let mut out = vec![
        check("ht_rho(p)", &w.horoball_height, &three),
        check("p^2", &w.p.norm(), &RealQuad::from_int(-3)),
        check("p' ^2", &w.p_prime.norm(), &RealQuad::from_int(-1)),
        check("<p', p>", &ip(&w.p_prime, &w.p), &(FieldElem::from_int(2) * FieldElem::omega_bar() * FieldElem::theta().conj())),
        check("|<p', p>|^2", &ip(&w.p_prime, &w.p).abs_sq(), &RealQuad::from_int(12)),
        check("cosh^2 d(p, p')", &w.cosh_sq_p_p_prime, &RealQuad::from_int(4)),
        check("sinh^2 radius of U", &w.sinh_sq_radius, &RealQuad::from_rational(rat(1, 3))),
        check("R(rho)", &w.r_rho, &AmbientVector::new(Default::default(), FieldElem::omega_bar(), FieldElem::zero())),
        check("t", &t, &q(-2, 2)),
        check("<x_t, p>", &x_t_p, &(RealQuad::from_int(-3) * &t - RealQuad::from_int(6))),
        check("x_t^2", &w.x.norm(), &(RealQuad::from_int(-3) * &t * &t - RealQuad::from_int(12) * &t - three.clone())),
        check("<R(rho), x>", &rrho_x, &expected_rrho_x),
        check("|<R(rho), x>|^2", &rrho_x.abs_sq(), &(three.clone() * q(-3, 4) * q(-3, 4))),
        check("ht_R(rho)(x)", &w.height_r_rho_x, &(q(57, -24) / RealQuad::from_int(9))),
        holds("ht_R(rho)(x) < 3", &w.height_r_rho_x, &three, w.height_r_rho_x < three, "<"),
        check("<x, rho>", &ip(&w.x, &rho), &FieldElem::from(&(RealQuad::from_int(-6) * &sqrt3))),
        check("x^2", &w.x.norm(), &RealQuad::from_int(-27)),
        check("u", &w.u, &RealQuad::new(rat(0, 1), rat(1, 4))),
        check("ht_rho(y_u) = 36/(9 + 4u√3)", &w.height_rho_y, &ht_y_formula),
        check("ht_rho(y)", &w.height_rho_y, &three),
        holds("ht_R(rho)(y) < 3", &w.height_r_rho_y, &three, w.height_r_rho_y < three, "<"),
    ];
    let four_thirds = RealQuad::from_rational(rat(4, 3));
    out.push(holds("cosh^2 d(y, p) < 4/3", &w.cosh_sq_y_p, &four_thirds, w.cosh_sq_y_p < four_thirds, "<"));
    Ok(out)
}
