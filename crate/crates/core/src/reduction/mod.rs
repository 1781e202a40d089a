//! Certified height reduction: every root of L is carried to a Leech root by
//! triflections in Leech roots, each step strictly lowering `|⟨ρ, s⟩|²` and
//! carrying an exact witness for one of the three lowering conditions.
//!
//! The step data lives in the parameter `y` of [`ycalc`]. A Leech root whose
//! `y` falls in the region `V` moves `ρ` closer to the projection point `p`;
//! a `y` on `∂V` at a point where the mirror ratio is below 1 moves `ρ`
//! closer to the mirror; the one remaining class of roots, `(σ₀; θ, -1)` with
//! `σ₀² = 9`, goes through the ball-overlap construction of [`overlap`].

pub mod corners;
mod engine;
pub mod overlap;
mod sample;
mod verify;
pub mod ycalc;

pub use corners::{verify_region_corners, CornerClass, RegionCornerReport};
pub use engine::{choose_reflection, normalize_m_theta, reduce_to_leech, Normalization, Recipe, ReductionTrace, StepCertificate, Witnesses};
pub use overlap::{certify_ball_overlap, overlap_constants, OverlapWitness};
pub use sample::{random_leech_root, sample_roots};
pub use verify::{verify_step, verify_trace, VerificationError};
pub use ycalc::{in_region_v, ratio_mirror_sq, ratio_p_sq, y_formula, y_in_lattice, y_param, RegionClass};

use serde::{Deserialize, Serialize};

use crate::field::FieldElem;
use crate::leech::LeechError;
use crate::lorentz::{LorentzError, Root};

/// Which lowering condition a step satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    /// The triflection moves `ρ` strictly closer to `p`.
    #[serde(rename = "P")]
    MovesCloserToP,
    /// It moves `ρ` strictly closer to the mirror and no farther from `p`.
    #[serde(rename = "MIRROR")]
    MovesCloserToMirror,
    /// The ball-overlap condition around `p`.
    #[serde(rename = "OVERLAP")]
    BallOverlap,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("no certified triflection for {root} (canonical y = {y})")]
    RecipeFailed { root: Box<Root>, y: FieldElem, steps_done: usize },
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
    #[error("height did not decrease: {before} -> {after}")]
    HeightNotDecreasing { before: String, after: String },
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Lorentz(#[from] LorentzError),
    #[error(transparent)]
    Leech(#[from] LeechError),
}

#[cfg(test)]
mod tests;
