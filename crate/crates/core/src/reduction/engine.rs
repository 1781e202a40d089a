use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::overlap::{certify_ball_overlap, OverlapWitness};
use super::ycalc::{in_region_v, ratio_mirror_sq, ratio_p_sq, y_param, RegionClass};
use super::{CaseTag, ReductionError};
use crate::field::{rat, CycloElem, Rational, EisensteinInt, FieldElem, RealQuad};
use crate::leech::{self, CosetTag, LeechPoint};
use crate::lorentz::{decompose, is_leech_root, leech_root, triflect_root, Decomposition, HeisenbergElement, LeechRootSpec, Root, Zeta};

/// `normalized = translation(unit · root)` with `m = θ` and `σ` the least
/// representative of its coset mod `θΛ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normalization {
    pub unit: EisensteinInt,
    pub translation: HeisenbergElement,
    pub tag: CosetTag,
    pub normalized: Root,
}

/// The exact quantities a step is judged by.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    /// `|⟨p, R(ρ)⟩ / ⟨p, ρ⟩|²`.
    pub ratio_p_sq: RealQuad,
    /// `|⟨s, R(ρ)⟩ / ⟨s, ρ⟩|²`, equal to `height_after / height_before`.
    pub ratio_mirror_sq: RealQuad,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub overlap: Option<OverlapWitness>,
}

/// Whether the step came from the canonical choice or the bounded search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Recipe {
    Canonical,
    Fallback,
}

/// One step: `root_after = post_unit · R_{l,ζ̄}(working)` where `working` is
/// `root_before` or its normalization, `l` the Leech root of `leech_root`
/// and `R = R_{l,ζ}` the triflection that moves `ρ` toward the mirror.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCertificate {
    pub case: CaseTag,
    pub root_before: Root,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalization: Option<Normalization>,
    pub leech_root: LeechRootSpec,
    pub zeta: Zeta,
    pub y_value: FieldElem,
    pub height_before: RealQuad,
    pub height_after: RealQuad,
    pub witnesses: Witnesses,
    pub recipe: Recipe,
    pub root_after: Root,
    pub post_unit: EisensteinInt,
}

impl StepCertificate {
    /// The root the triflection acts on.
    pub fn working_root(&self) -> &Root {
        self.normalization.as_ref().map_or(&self.root_before, |n| &n.normalized)
    }
}

/// `final = replay(steps)(initial_unit · root)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub root: Root,
    pub initial_unit: EisensteinInt,
    pub steps: Vec<StepCertificate>,
    #[serde(rename = "final")]
    pub final_root: Root,
}

impl ReductionTrace {
    pub fn heights(&self) -> Vec<RealQuad> {
        let mut out: Vec<RealQuad> = self.steps.iter().map(|s| s.height_before.clone()).collect();
        out.push(rho_height(&self.final_root));
        out
    }

    /// The Heisenberg elements used by the `m = θ` normalizations, in order.
    pub fn heisenberg_word(&self) -> Vec<HeisenbergElement> {
        self.steps.iter().filter_map(|s| s.normalization.as_ref().map(|n| n.translation.clone())).collect()
    }

    pub fn fallback_count(&self) -> usize {
        self.steps.iter().filter(|s| s.recipe == Recipe::Fallback).count()
    }
}

fn rho_height(s: &Root) -> RealQuad {
    RealQuad::from_rational(Rational::from_integer(s.rho_height()))
}

pub fn normalize_m_theta(s: &Root) -> Result<Normalization, ReductionError> {
    let m = s.m();
    if m.norm() != 3.into() {
        return Err(ReductionError::Precondition(format!("|m|^2 = {} is not 3", m.norm())));
    }
    let unit = (FieldElem::theta() / FieldElem::from(&m)).to_eisenstein().expect("θ/m is a unit when |m|² = 3");
    let s1 = s.scale_unit(&unit);
    let sigma = s1.sigma();
    let class = leech::standard().coset_rep(&sigma)?;
    let diff = &sigma - &class.representative;
    let mu_coords: Vec<EisensteinInt> = diff.coords.iter().map(|c| c.div_by_theta().expect("σ ≡ σ₀ mod θΛ")).collect();
    let mu = LeechPoint::from_slice(&mu_coords).expect("twelve coordinates");
    let shift = HeisenbergElement::with_offset(-&mu, 0);
    let shifted = shift.apply(s1.vector());
    let nu = decompose(&shifted)?.nu;
    let theta = FieldElem::theta();
    let target = match class.tag {
        CosetTag::Zero => theta.scale(&rat(1, 2)),
        CosetTag::Norm6 => theta.scale(&rat(-1, 2)),
        CosetTag::Norm9 => FieldElem::zero(),
    };
    // central(k) adds kθ to z, which lowers ν by kθ
    let k = ((&nu - &target) / theta)
        .to_real()
        .filter(RealQuad::is_rational)
        .and_then(|r| r.p.is_integer().then(|| r.p.to_integer()))
        .and_then(|k| k.to_i64())
        .ok_or_else(|| ReductionError::CertificateFailed(format!("ν = {nu} is not in {target} + θℤ")))?;
    let translation = HeisenbergElement::central(k).compose(&shift);
    let normalized = Root::new(translation.apply(s1.vector()))?;
    debug_assert_eq!(normalized.sigma(), class.representative);
    Ok(Normalization { unit, translation, tag: class.tag, normalized })
}

struct Candidate {
    spec: LeechRootSpec,
    zeta: Zeta,
    y: FieldElem,
    case: CaseTag,
    ratio_p: RealQuad,
    ratio_mirror: RealQuad,
}

fn judge(dec: &Decomposition, spec: &LeechRootSpec, zeta: Zeta) -> Option<Candidate> {
    let y = y_param(dec, spec);
    let ratio_p = ratio_p_sq(&y, zeta);
    let ratio_mirror = ratio_mirror_sq(&y, &dec.m_sq(), zeta);
    let one = RealQuad::one();
    if ratio_mirror >= one {
        return None;
    }
    let case = if ratio_p < one {
        CaseTag::MovesCloserToP
    } else if ratio_p == one {
        CaseTag::MovesCloserToMirror
    } else {
        return None;
    };
    Some(Candidate { spec: spec.clone(), zeta, y, case, ratio_p, ratio_mirror })
}

/// `λ` nearest `σ/m` and the admissible `ν_l` putting `Im y` in `[-θ/2, θ/2]`.
fn canonical_spec(dec: &Decomposition, lambda: LeechPoint) -> LeechRootSpec {
    let spec = LeechRootSpec::from_t(lambda.clone(), LeechRootSpec::t_offset(&lambda));
    let w = y_param(dec, &spec).im_over_theta();
    // raising t by one lowers y by θ
    let k = (w + RealQuad::from_rational(rat(1, 2))).floor();
    spec.shifted(k.to_i64().expect("small shift"))
}

fn target_of(dec: &Decomposition) -> Vec<FieldElem> {
    let m_inv = dec.m.inv();
    dec.sigma.iter().map(|x| x * &m_inv).collect()
}

fn search(dec: &Decomposition) -> Result<(Candidate, Recipe), FieldElem> {
    let lam = leech::standard()
        .cvp(&target_of(dec), &RealQuad::from_int(3))
        .expect("covering radius² is 3")
        .0;
    let spec = canonical_spec(dec, lam);
    let y = y_param(dec, &spec);
    let canonical = match in_region_v(&y) {
        RegionClass::Inside(z) => judge(dec, &spec, z),
        RegionClass::Boundary(z) => judge(dec, &spec, z).or_else(|| judge(dec, &spec, z.inverse())),
        RegionClass::Outside => None,
    };
    if let Some(c) = canonical {
        return Ok((c, Recipe::Canonical));
    }
    let target: Vec<CycloElem> = target_of(dec).iter().map(|x| x.to_cyclo().expect("σ/m ∈ ℚ(ω)")).collect();
    for (lambda, _) in leech::standard().close_vectors(&target, &RealQuad::from_int(3)) {
        let base = canonical_spec(dec, lambda);
        for k in -2..=2 {
            let spec = base.shifted(k);
            for zeta in [Zeta::Omega, Zeta::OmegaBar] {
                if let Some(c) = judge(dec, &spec, zeta) {
                    return Ok((c, Recipe::Fallback));
                }
            }
        }
    }
    Err(y)
}

fn finish(
    s: &Root,
    normalization: Option<Normalization>,
    c: Candidate,
    recipe: Recipe,
    overlap: Option<OverlapWitness>,
) -> Result<StepCertificate, ReductionError> {
    let working = normalization.as_ref().map_or(s, |n| &n.normalized);
    let l = leech_root(&c.spec)?;
    let (root_after, post_unit) = triflect_root(&l, c.zeta.inverse(), working).canonical_associate();
    let height_before = rho_height(s);
    let height_after = rho_height(&root_after);
    if height_after >= height_before || height_after != &height_before * &c.ratio_mirror {
        return Err(ReductionError::HeightNotDecreasing { before: height_before.to_string(), after: height_after.to_string() });
    }
    Ok(StepCertificate {
        case: c.case,
        root_before: s.clone(),
        normalization,
        leech_root: c.spec,
        zeta: c.zeta,
        y_value: c.y,
        height_before,
        height_after,
        witnesses: Witnesses { ratio_p_sq: c.ratio_p, ratio_mirror_sq: c.ratio_mirror, overlap },
        recipe,
        root_after,
        post_unit,
    })
}

/// One certified step for a non-Leech root.
pub fn choose_reflection(s: &Root) -> Result<StepCertificate, ReductionError> {
    if s.m().norm() <= One::one() {
        return Err(ReductionError::Precondition(format!("{s} is already a Leech root")));
    }
    let normalization = if s.m().norm() == 3.into() { Some(normalize_m_theta(s)?) } else { None };
    let working = normalization.as_ref().map_or(s, |n| &n.normalized);
    let dec = decompose(working.vector())?;
    if normalization.as_ref().is_some_and(|n| n.tag == CosetTag::Norm9) {
        let spec = LeechRootSpec::from_t(LeechPoint::zero(), rat(1, 2));
        let zeta = Zeta::Omega;
        let w = certify_ball_overlap(working, &leech_root(&spec)?, zeta)?;
        let y = y_param(&dec, &spec);
        let c = Candidate {
            ratio_p: ratio_p_sq(&y, zeta),
            ratio_mirror: ratio_mirror_sq(&y, &dec.m_sq(), zeta),
            spec,
            zeta,
            y,
            case: CaseTag::BallOverlap,
        };
        return finish(s, normalization, c, Recipe::Canonical, Some(w));
    }
    match search(&dec) {
        Ok((c, recipe)) => finish(s, normalization, c, recipe, None),
        Err(y) => Err(ReductionError::RecipeFailed { root: Box::new(s.clone()), y, steps_done: 0 }),
    }
}

/// Reduces `s` to a Leech root, one certified step at a time.
pub fn reduce_to_leech(s: &Root) -> Result<ReductionTrace, ReductionError> {
    let (mut current, initial_unit) = s.canonical_associate();
    let mut steps = Vec::new();
    while !is_leech_root(&current) {
        let step = choose_reflection(&current).map_err(|e| match e {
            ReductionError::RecipeFailed { root, y, .. } => ReductionError::RecipeFailed { root, y, steps_done: steps.len() },
            e => e,
        })?;
        current = step.root_after.clone();
        steps.push(step);
    }
    Ok(ReductionTrace { root: s.clone(), initial_unit, steps, final_root: current })
}
