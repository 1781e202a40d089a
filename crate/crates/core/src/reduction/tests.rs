use super::*;
use crate::field::{rat, EisensteinInt, FieldElem, RealQuad};
use crate::leech::{CosetTag, LeechPoint};
use crate::lorentz::{decompose, Root, Zeta};

fn e(a: i64, b: i64) -> EisensteinInt {
    EisensteinInt::new(a, b)
}

fn zero_type() -> Root {
    Root::integral(&LeechPoint::zero(), EisensteinInt::theta(), e(0, -1)).unwrap()
}

fn six_type() -> Root {
    Root::integral(&LeechPoint::lambda6(), EisensteinInt::theta(), e(0, 1)).unwrap()
}

fn nine_type() -> Root {
    Root::integral(&LeechPoint::lambda9(), EisensteinInt::theta(), e(-1, 0)).unwrap()
}

fn zero_spec() -> crate::lorentz::LeechRootSpec {
    crate::lorentz::LeechRootSpec::from_t(LeechPoint::zero(), rat(1, 2))
}

#[test]
fn y_of_the_model_roots() {
    let d = decompose(zero_type().vector()).unwrap();
    let y = y_param(&d, &zero_spec());
    assert_eq!(y.re_part(), RealQuad::one());
    assert_eq!(y_formula(&d, &zero_spec()), y);
    let d6 = decompose(six_type().vector()).unwrap();
    let y6 = y_param(&d6, &zero_spec());
    assert!(y6.re_part().is_zero());
    assert_eq!(y_formula(&d6, &zero_spec()), y6);
    let d9 = decompose(nine_type().vector()).unwrap();
    let y9 = y_param(&d9, &zero_spec());
    assert_eq!(y9, FieldElem::omega_bar());
    assert_eq!(y_formula(&d9, &zero_spec()), y9);
    for (d, y) in [(&d, &y), (&d6, &y6), (&d9, &y9)] {
        assert!(y_in_lattice(y, &d.m));
    }
}

#[test]
fn ratio_examples() {
    for z in [Zeta::Omega, Zeta::OmegaBar] {
        let center = FieldElem::one() - z.value();
        assert!(ratio_p_sq(&center, z).is_zero());
        assert_eq!(ratio_p_sq(&FieldElem::zero(), z), RealQuad::one());
        let m_sq = RealQuad::from_int(7);
        let shifted = &center - &(FieldElem::from_int(3) / FieldElem::from(&m_sq));
        assert!(ratio_mirror_sq(&shifted, &m_sq, z).is_zero());
    }
    let r = ratio_mirror_sq(&FieldElem::zero(), &RealQuad::from_int(3), Zeta::Omega);
    assert_eq!(r, RealQuad::from_rational(rat(1, 3)));
    assert_eq!(ratio_mirror_sq(&FieldElem::omega_bar(), &RealQuad::from_int(3), Zeta::Omega), RealQuad::from_rational(rat(1, 3)));
}

#[test]
fn region_examples() {
    assert!(matches!(in_region_v(&FieldElem::one()), RegionClass::Inside(_)));
    assert_eq!(in_region_v(&FieldElem::zero()), RegionClass::Boundary(Zeta::Omega));
    assert_eq!(in_region_v(&FieldElem::from_int(-2)), RegionClass::Outside);
    assert_eq!(in_region_v(&FieldElem::omega_bar()), RegionClass::Outside);
}

#[test]
fn v5_at_seven_is_a_mirror_step() {
    let r = verify_region_corners(7);
    let c = r.corners.iter().find(|c| c.name == "v5").unwrap();
    assert_eq!(c.class, CornerClass::Boundary);
}

#[test]
fn normalization_of_the_model_roots() {
    let n = normalize_m_theta(&nine_type()).unwrap();
    assert_eq!(n.tag, CosetTag::Norm9);
    assert_eq!(n.normalized, nine_type());
    assert_eq!(n.translation, crate::lorentz::HeisenbergElement::identity());
    assert_eq!(normalize_m_theta(&zero_type()).unwrap().tag, CosetTag::Zero);
    assert_eq!(normalize_m_theta(&zero_type()).unwrap().normalized, zero_type());
    let n6 = normalize_m_theta(&six_type()).unwrap();
    assert_eq!(n6.tag, CosetTag::Norm6);
    assert_eq!(decompose(n6.normalized.vector()).unwrap().nu, FieldElem::theta().scale(&rat(-1, 2)));
}

#[test]
fn normalization_undoes_translations() {
    let t = crate::lorentz::HeisenbergElement::with_offset(LeechPoint::lambda9(), 3);
    for s in [zero_type(), six_type(), nine_type()] {
        let moved = Root::new(t.apply(s.vector())).unwrap().scale_unit(&EisensteinInt::omega());
        let n = normalize_m_theta(&moved).unwrap();
        assert_eq!(n.normalized.m(), EisensteinInt::theta());
        assert_eq!(n.normalized.sigma().norm(), s.sigma().norm());
        let replay = n.translation.apply(&moved.vector().scale(&FieldElem::from(&n.unit)));
        assert_eq!(&replay, n.normalized.vector());
    }
}

#[test]
fn one_step_cases() {
    let c = choose_reflection(&zero_type()).unwrap();
    assert_eq!(c.case, CaseTag::MovesCloserToP);
    assert_eq!(c.y_value.re_part(), RealQuad::one());
    let c6 = choose_reflection(&six_type()).unwrap();
    assert_eq!(c6.case, CaseTag::MovesCloserToMirror);
    assert!(c6.y_value.is_zero());
    let c9 = choose_reflection(&nine_type()).unwrap();
    assert_eq!(c9.case, CaseTag::BallOverlap);
    assert_eq!(c9.leech_root, zero_spec());
    assert_eq!(c9.zeta, Zeta::Omega);
    let w = c9.witnesses.overlap.as_ref().unwrap();
    assert_eq!(w.t, RealQuad::new(rat(-2, 1), rat(2, 1)));
    assert_eq!(w.u, RealQuad::new(rat(0, 1), rat(1, 4)));
    for c in [&c, &c6, &c9] {
        assert_eq!(c.height_before, RealQuad::from_int(9));
        assert_eq!(c.height_after, RealQuad::from_int(3));
        verify_step(c).unwrap();
    }
}

#[test]
fn overlap_constants_all_match() {
    for c in overlap_constants().unwrap() {
        assert!(c.matches, "{c:?}");
    }
}

#[test]
fn reduce_sampled_roots() {
    let roots = sample_roots(12, 4, 7);
    for s in roots {
        let trace = reduce_to_leech(&s).unwrap();
        verify_trace(&trace).unwrap();
        let h = trace.heights();
        assert!(h.windows(2).all(|w| w[1] < w[0]), "{h:?}");
    }
}

#[test]
fn tampered_certificates_fail() {
    let trace = reduce_to_leech(&zero_type()).unwrap();
    verify_trace(&trace).unwrap();
    let mut bad = trace.clone();
    bad.steps[0].height_after = RealQuad::from_int(1);
    assert_eq!(verify_trace(&bad).unwrap_err().step, Some(0));
    let mut flipped = trace.clone();
    flipped.steps[0].zeta = flipped.steps[0].zeta.inverse();
    assert_eq!(verify_trace(&flipped).unwrap_err().step, Some(0));
}

#[test]
fn sample_is_seed_stable() {
    assert_eq!(sample_roots(3, 5, 11), sample_roots(3, 5, 11));
    let bare = sample_roots(1, 0, 1);
    assert!(crate::lorentz::is_leech_root(&bare[0]));
}
