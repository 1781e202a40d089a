//! Independent re-checking of reduction certificates.
//!
//! Nothing here calls the producer's choice logic or its `y` calculus: `y`
//! and the two ratios are recomputed straight from inner products of the
//! recorded vectors.

use serde::{Deserialize, Serialize};

use super::engine::{ReductionTrace, StepCertificate};
use super::overlap::verify_overlap_witness;
use super::CaseTag;
use crate::field::{FieldElem, Rational, RealQuad};
use crate::leech;
use crate::lorentz::{ip, is_leech_root, leech_root, project_to_mirror, triflection, AmbientVector, Root};

/// The first failing step (`None` for the trace envelope) and why.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("verification failed at step {step:?}: {reason}")]
pub struct VerificationError {
    pub step: Option<usize>,
    pub reason: String,
}

fn ensure(ok: bool, reason: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(reason())
    }
}

fn rho_height(s: &AmbientVector) -> RealQuad {
    ip(&AmbientVector::rho(), s).abs_sq()
}

/// Checks one step in isolation and returns the root it produces.
pub fn verify_step(step: &StepCertificate) -> Result<Root, String> {
    let rho = AmbientVector::rho();
    let before = &step.root_before;
    let working: Root = match &step.normalization {
        None => before.clone(),
        Some(n) => {
            ensure(n.unit.is_unit(), || "normalization unit is not a unit".into())?;
            n.translation.validate().map_err(|e| e.to_string())?;
            let moved = n.translation.apply(&before.vector().scale(&FieldElem::from(&n.unit)));
            ensure(moved == *n.normalized.vector(), || "normalization does not replay".into())?;
            ensure(n.normalized.m() == crate::field::EisensteinInt::theta(), || "normalized root does not have m = θ".into())?;
            let class = leech::standard().coset_rep(&n.normalized.sigma()).map_err(|e| e.to_string())?;
            ensure(class.tag == n.tag && class.representative.norm() == n.normalized.sigma().norm(), || "coset tag does not match".into())?;
            n.normalized.clone()
        }
    };
    let s = working.vector();
    let l = leech_root(&step.leech_root).map_err(|e| e.to_string())?;
    ensure(is_leech_root(&l), || "leech_root is not a Leech root".into())?;

    let h_before = rho_height(s);
    ensure(h_before == step.height_before, || format!("height_before is {h_before}, recorded {}", step.height_before))?;
    ensure(rho_height(before.vector()) == h_before, || "normalization changed the height".into())?;

    let p = project_to_mirror(&rho, &working);
    let r_rho = triflection(&l, step.zeta, &rho);
    let m_sq = s.y.abs_sq();
    let y = (FieldElem::theta() / FieldElem::from(&m_sq)) * ip(&p, l.vector());
    ensure(y == step.y_value, || format!("y is {y}, recorded {}", step.y_value))?;
    let shifted = &y + &(FieldElem::from_int(3) / FieldElem::from(&m_sq));
    ensure((shifted * s.y.clone() / FieldElem::theta()).is_integral(), || "y is not in -3/|m|² + (θ/m)ℰ".into())?;

    let ratio_p = ip(&p, &r_rho).abs_sq() / ip(&p, &rho).abs_sq();
    let ratio_mirror = ip(s, &r_rho).abs_sq() / ip(s, &rho).abs_sq();
    let w = &step.witnesses;
    ensure(ratio_p == w.ratio_p_sq, || format!("ratio_p_sq is {ratio_p}, recorded {}", w.ratio_p_sq))?;
    ensure(ratio_mirror == w.ratio_mirror_sq, || format!("ratio_mirror_sq is {ratio_mirror}, recorded {}", w.ratio_mirror_sq))?;
    let one = RealQuad::one();
    match step.case {
        CaseTag::MovesCloserToP => ensure(ratio_p < one, || format!("case P needs ratio_p_sq < 1, have {ratio_p}"))?,
        CaseTag::MovesCloserToMirror => {
            ensure(ratio_mirror < one, || format!("case MIRROR needs ratio_mirror_sq < 1, have {ratio_mirror}"))?;
            ensure(ratio_p == one, || format!("case MIRROR needs ratio_p_sq = 1, have {ratio_p}"))?;
        }
        CaseTag::BallOverlap => {
            let ow = w.overlap.as_ref().ok_or("case OVERLAP without overlap witness")?;
            verify_overlap_witness(&working, &l, step.zeta, ow).map_err(|e| e.to_string())?;
        }
    }
    if step.case != CaseTag::BallOverlap {
        ensure(w.overlap.is_none(), || "unexpected overlap witness".into())?;
    }

    ensure(step.post_unit.is_unit(), || "post_unit is not a unit".into())?;
    let after = triflection(&l, step.zeta.inverse(), s).scale(&FieldElem::from(&step.post_unit));
    ensure(after == *step.root_after.vector(), || "root_after does not replay".into())?;
    let h_after = rho_height(&after);
    ensure(h_after == step.height_after, || format!("height_after is {h_after}, recorded {}", step.height_after))?;
    ensure(h_after == &h_before * &ratio_mirror, || "height_after is not height_before times the mirror ratio".into())?;
    ensure(h_after < h_before, || format!("height {h_before} -> {h_after} does not decrease"))?;
    // heights are 3|m|² with |m|² an Eisenstein norm
    let three_norm = |h: &RealQuad| h.is_rational() && (&h.p / Rational::from_integer(3.into())).is_integer();
    ensure(three_norm(&h_before) && three_norm(&h_after), || "heights are not in 3ℤ".into())?;
    Ok(step.root_after.clone())
}

/// Replays a whole trace from its initial root.
pub fn verify_trace(trace: &ReductionTrace) -> Result<(), VerificationError> {
    let envelope = |reason: String| VerificationError { step: None, reason };
    if !trace.initial_unit.is_unit() {
        return Err(envelope("initial_unit is not a unit".into()));
    }
    let mut current = trace.root.scale_unit(&trace.initial_unit);
    for (i, step) in trace.steps.iter().enumerate() {
        let fail = |reason: String| VerificationError { step: Some(i), reason };
        if step.root_before != current {
            return Err(fail("root_before is not the previous root".into()));
        }
        current = verify_step(step).map_err(fail)?;
    }
    if current != trace.final_root {
        return Err(envelope("final root does not match the replay".into()));
    }
    if !is_leech_root(&current) {
        return Err(envelope("final root is not a Leech root".into()));
    }
    Ok(())
}
