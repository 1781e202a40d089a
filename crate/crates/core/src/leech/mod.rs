//! The complex Leech lattice Λ ⊂ ℰ¹² under `⟨x, y⟩ = ⅓ Σ xᵢȳᵢ`.
//!
//! Membership: `x ≡ m𝟏 (mod θ)` for some `m ∈ {0, ±1}`, the word
//! `(x - m𝟏)/θ mod θ` lies in the ternary Golay code, and
//! `Σxᵢ ≡ -3m (mod θ³)`. At this scale Λ has minimal norm 6 and equals `θΛ*`;
//! [`LeechLattice::verify`] checks both from the reduced basis.

mod decoder;
pub mod golay;
pub mod linalg;
mod point;

pub use golay::{GolayError, GolayTernary};
pub use point::LeechPoint;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::field::{CycloElem, EisensteinInt, FieldElem, Rational, RealQuad};
use decoder::{Decoder, ScaledTarget};
use linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LeechError {
    #[error("lattice construction invalid: {0}")]
    ConstructionInvalid(String),
    #[error("no lattice point within squared distance {radius_sq} (nearest is at {nearest})")]
    NotFound { radius_sq: String, nearest: String },
    #[error("target coordinates must lie in Q(omega)")]
    NonCyclotomicTarget,
    #[error("coset has no representative of norm at most 9 (least norm {0})")]
    ClassificationFailed(String),
    #[error("vector is not in the lattice")]
    NotInLattice,
}

/// Norm class of a coset `σ + θΛ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CosetTag {
    Zero,
    Norm6,
    Norm9,
}

impl CosetTag {
    pub fn norm(self) -> i64 {
        match self {
            CosetTag::Zero => 0,
            CosetTag::Norm6 => 6,
            CosetTag::Norm9 => 9,
        }
    }
}

/// A least-norm representative of `σ + θΛ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeechCosetClass {
    pub tag: CosetTag,
    pub representative: LeechPoint,
}

/// Outcome of the structural checks, one field per property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeChecks {
    pub golay_ok: bool,
    pub basis_in_lattice: bool,
    pub rank: usize,
    /// Nonzero vectors of norm below 6 found by exhaustive enumeration.
    pub short_vectors: usize,
    /// Norm of the shortest basis vector; 6 certifies the minimum is attained.
    #[serde(with = "crate::field::json::rational")]
    pub min_basis_norm: Rational,
    pub gram_in_theta_e: bool,
    pub theta_inverse_integral: bool,
    #[serde(with = "crate::field::json::rational")]
    pub det: Rational,
}

impl LatticeChecks {
    pub fn min_norm_is_6(&self) -> bool {
        self.short_vectors == 0 && self.min_basis_norm == Rational::from_integer(6.into())
    }

    pub fn theta_dual(&self) -> bool {
        self.gram_in_theta_e && self.theta_inverse_integral
    }

    pub fn det_is_729(&self) -> bool {
        self.det == Rational::from_integer(729.into())
    }

    pub fn all_pass(&self) -> bool {
        self.golay_ok && self.basis_in_lattice && self.rank == 12 && self.min_norm_is_6() && self.theta_dual() && self.det_is_729()
    }

    fn failure(&self) -> Option<String> {
        if !self.golay_ok {
            return Some("Golay code check failed".into());
        }
        if !self.basis_in_lattice {
            return Some("a basis vector fails the membership predicate".into());
        }
        if self.rank != 12 {
            return Some(format!("rank {} instead of 12", self.rank));
        }
        if !self.min_norm_is_6() {
            return Some(format!(
                "minimal norm is not 6 ({} short vectors, shortest basis norm {})",
                self.short_vectors, self.min_basis_norm
            ));
        }
        if !self.theta_dual() {
            return Some("lattice is not theta times its dual".into());
        }
        if !self.det_is_729() {
            return Some(format!("Gram determinant {} instead of 729", self.det));
        }
        None
    }
}

/// Exported lattice data, all exact integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeExport {
    pub golay: [[u8; 12]; 6],
    pub basis: Vec<LeechPoint>,
    pub gram: Vec<Vec<EisensteinInt>>,
}

/// The lattice handle: Golay code, reduced basis, Gram matrix and decoder.
/// Immutable once built.
#[derive(Clone, Debug)]
pub struct LeechLattice {
    golay: GolayTernary,
    basis: Vec<LeechPoint>,
    gram: Vec<Vec<EisensteinInt>>,
    decoder: Decoder,
}

/// Builds Λ from the standard Golay code and verifies it; any failed check
/// aborts with [`LeechError::ConstructionInvalid`].
pub fn build_leech() -> Result<LeechLattice, LeechError> {
    let golay = GolayTernary::standard();
    golay.verify().map_err(|e| LeechError::ConstructionInvalid(e.to_string()))?;
    let gens: Vec<Vec<EisensteinInt>> = generators(&golay).into_iter().map(|p| p.coords.to_vec()).collect();
    let basis = linalg::lll(linalg::echelon(gens));
    let basis: Vec<LeechPoint> = basis
        .iter()
        .map(|b| LeechPoint::from_slice(b).expect("rows have 12 coordinates"))
        .collect();
    LeechLattice::from_parts(golay, basis)
}

static STANDARD: OnceLock<LeechLattice> = OnceLock::new();

/// The lattice of [`build_leech`], built and verified once per process.
///
/// # Panics
/// If the standard construction fails its checks.
pub fn standard() -> &'static LeechLattice {
    STANDARD.get_or_init(|| build_leech().expect("standard construction verifies"))
}

/// Spanning set: `v₀ = (-2, -2, 1, …, 1)`, `θĝ` for each Golay row,
/// `θ²(eᵢ - e₁₂)` and `θ³e₁₂`.
pub fn generators(golay: &GolayTernary) -> Vec<LeechPoint> {
    let theta = EisensteinInt::theta();
    let theta2 = &theta * &theta;
    let theta3 = &theta2 * &theta;
    let mut out = Vec::new();
    let mut v0 = LeechPoint::new(std::array::from_fn(|_| EisensteinInt::one()));
    v0.coords[0] = EisensteinInt::from_int(-2);
    v0.coords[1] = EisensteinInt::from_int(-2);
    out.push(v0);
    for row in &golay.rows {
        // lift entries to {0, 1, -1} so the coordinate sum is a multiple of 3
        out.push(LeechPoint::new(std::array::from_fn(|i| {
            let lift = match row[i] {
                0 => 0,
                1 => 1,
                _ => -1,
            };
            theta.scale(&BigInt::from(lift))
        })));
    }
    for i in 0..11 {
        let mut p = LeechPoint::zero();
        p.coords[i] = theta2.clone();
        p.coords[11] = -&theta2;
        out.push(p);
    }
    out.push(LeechPoint::unit_vector(11, theta3));
    out
}

fn to_cyclo_target(target: &[FieldElem]) -> Result<Vec<CycloElem>, LeechError> {
    target
        .iter()
        .map(|x| x.to_cyclo().ok_or(LeechError::NonCyclotomicTarget))
        .collect()
}

impl LeechLattice {
    /// Wraps a basis and runs [`LeechLattice::verify`].
    pub fn from_parts(golay: GolayTernary, basis: Vec<LeechPoint>) -> Result<Self, LeechError> {
        let gram = Self::integral_gram(&basis)?;
        let decoder = Decoder::new(&golay);
        let lattice = LeechLattice { golay, basis, gram, decoder };
        let checks = lattice.verify();
        match checks.failure() {
            None => Ok(lattice),
            Some(msg) => Err(LeechError::ConstructionInvalid(msg)),
        }
    }

    /// Imports a basis (for instance from a file) against the standard code.
    pub fn from_basis(basis: Vec<LeechPoint>) -> Result<Self, LeechError> {
        Self::from_parts(GolayTernary::standard(), basis)
    }

    fn integral_gram(basis: &[LeechPoint]) -> Result<Vec<Vec<EisensteinInt>>, LeechError> {
        let rows: Vec<Vec<EisensteinInt>> = basis.iter().map(|b| b.coords.to_vec()).collect();
        linalg::gram_of(&rows)
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|g| g.to_integer().ok_or_else(|| LeechError::ConstructionInvalid("non-integral Gram entry".into())))
                    .collect()
            })
            .collect()
    }

    pub fn golay(&self) -> &GolayTernary {
        &self.golay
    }

    pub fn basis(&self) -> &[LeechPoint] {
        &self.basis
    }

    /// `Gᵢⱼ = ⟨bᵢ, bⱼ⟩`.
    pub fn gram(&self) -> &[Vec<EisensteinInt>] {
        &self.gram
    }

    pub fn gram_cyclo(&self) -> Matrix {
        self.gram.iter().map(|r| r.iter().map(CycloElem::from).collect()).collect()
    }

    pub fn export(&self) -> LatticeExport {
        LatticeExport {
            golay: self.golay.rows,
            basis: self.basis.clone(),
            gram: self.gram.clone(),
        }
    }

    /// The membership predicate.
    pub fn contains(&self, x: &LeechPoint) -> bool {
        let theta = EisensteinInt::theta();
        let m = match x.coords[0].residue_mod_theta() {
            0 => 0i64,
            1 => 1,
            _ => -1,
        };
        let mm = EisensteinInt::from_int(m);
        let mut word = [0u8; 12];
        for (i, xi) in x.coords.iter().enumerate() {
            let Ok(y) = (xi - &mm).div_by_theta() else {
                return false;
            };
            word[i] = y.residue_mod_theta();
        }
        if !self.golay.contains(&word) {
            return false;
        }
        let mut sum = EisensteinInt::from_int(3 * m);
        for xi in &x.coords {
            sum += xi;
        }
        sum.is_divisible_by(&(&(&theta * &theta) * &theta))
    }

    /// Exact Gram determinant over ℚ(ω); real and rational for a Hermitian
    /// Gram matrix.
    pub fn det(&self) -> Rational {
        let d = linalg::det(&self.gram_cyclo());
        assert!(d.is_real(), "Hermitian determinant is real");
        d.a
    }

    /// Exhaustive check of all properties the rest of the crate relies on.
    pub fn verify(&self) -> LatticeChecks {
        let golay_ok = self.golay.verify().is_ok();
        let basis_in_lattice = self.basis.iter().all(|b| self.contains(b));
        let rank = self.basis.len();
        let g = self.gram_cyclo();
        let det = if rank == 12 { self.det() } else { Rational::zero() };
        let nondegenerate = rank == 12 && det.is_positive();
        let theta = EisensteinInt::theta();
        let gram_in_theta_e = self.gram.iter().flatten().all(|x| x.is_divisible_by(&theta));
        let theta_inverse_integral = nondegenerate
            && linalg::inverse(&g).is_some_and(|inv| {
                let t = CycloElem::theta();
                inv.iter().flatten().all(|x| (&t * x).to_integer().is_some())
            });
        // norms lie in 3ℤ once the Gram matrix is in θℰ, so a search to
        // radius 3 finds every nonzero vector of norm below 6
        let short_vectors = if nondegenerate && gram_in_theta_e {
            linalg::fincke_pohst(&g, &vec![CycloElem::zero(); 12], &Rational::from_integer(3.into()))
                .iter()
                .filter(|x| !linalg::is_zero_vec(x))
                .count()
        } else {
            usize::MAX
        };
        let min_basis_norm = self.basis.iter().map(|b| b.norm()).min().unwrap_or_else(Rational::zero);
        LatticeChecks {
            golay_ok,
            basis_in_lattice,
            rank,
            short_vectors,
            min_basis_norm,
            gram_in_theta_e,
            theta_inverse_integral,
            det,
        }
    }

    /// Nearest lattice point to `target` with its squared distance, if that
    /// distance is at most `radius_sq`. Ties go to the lexicographically
    /// least point.
    pub fn cvp(&self, target: &[FieldElem], radius_sq: &RealQuad) -> Result<(LeechPoint, Rational), LeechError> {
        self.cvp_cyclo(&to_cyclo_target(target)?, radius_sq)
    }

    pub fn cvp_cyclo(&self, target: &[CycloElem], radius_sq: &RealQuad) -> Result<(LeechPoint, Rational), LeechError> {
        let st = ScaledTarget::new(target);
        let (p, cost) = self.decoder.nearest(&st);
        let dist = Rational::new(cost, st.cost_scale());
        if RealQuad::from_rational(dist.clone()) > *radius_sq {
            return Err(LeechError::NotFound {
                radius_sq: radius_sq.to_string(),
                nearest: dist.to_string(),
            });
        }
        Ok((p, dist))
    }

    /// Every lattice point within squared distance `radius_sq` of `target`,
    /// sorted by distance and then lexicographically.
    pub fn close_vectors(&self, target: &[CycloElem], radius_sq: &RealQuad) -> Vec<(LeechPoint, Rational)> {
        let st = ScaledTarget::new(target);
        let scale = st.cost_scale();
        let bound = (radius_sq * &RealQuad::from_rational(Rational::from_integer(scale.clone()))).floor();
        if bound.is_negative() {
            return Vec::new();
        }
        let mut out = Vec::new();
        self.decoder.visit(&st, &bound, |x, cost| {
            out.push((LeechPoint::from_slice(x).expect("twelve coordinates"), Rational::new(cost.clone(), scale.clone())));
        });
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// Independent closest-vector oracle: Fincke–Pohst on the reduced basis.
    /// Returns the same set as [`LeechLattice::close_vectors`].
    pub fn close_vectors_fincke_pohst(&self, target: &[CycloElem], radius_sq: &Rational) -> Vec<(LeechPoint, Rational)> {
        let g = self.gram_cyclo();
        let inv = linalg::inverse(&g).expect("nondegenerate Gram");
        // coefficients τ with t = Σ τᵢ bᵢ: ⟨t, bⱼ⟩ = Σᵢ τᵢ Gᵢⱼ
        let rhs: Vec<CycloElem> = self
            .basis
            .iter()
            .map(|b| linalg::hermitian(target, &b.to_cyclo()))
            .collect();
        let tau: Vec<CycloElem> = (0..12)
            .map(|i| {
                let mut acc = CycloElem::zero();
                for j in 0..12 {
                    acc += &rhs[j] * &inv[j][i];
                }
                acc
            })
            .collect();
        let mut out: Vec<(LeechPoint, Rational)> = linalg::fincke_pohst(&g, &tau, radius_sq)
            .into_iter()
            .map(|x| {
                let mut p = LeechPoint::zero();
                for (xi, b) in x.iter().zip(&self.basis) {
                    p = &p + &b.scale(xi);
                }
                let diff: Vec<CycloElem> = p.to_cyclo().iter().zip(target).map(|(a, b)| a - b).collect();
                (p, linalg::hermitian(&diff, &diff).a)
            })
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// Least-norm representative of `σ + θΛ`, tagged by its norm. When `σ`
    /// itself has least norm it is returned unchanged.
    pub fn coset_rep(&self, sigma: &LeechPoint) -> Result<LeechCosetClass, LeechError> {
        if !self.contains(sigma) {
            return Err(LeechError::NotInLattice);
        }
        let theta = CycloElem::theta();
        let target: Vec<CycloElem> = sigma.to_cyclo().iter().map(|x| x / &theta).collect();
        let st = ScaledTarget::new(&target);
        let (nearest, cost) = self.decoder.nearest(&st);
        // ⟨σ - θλ, σ - θλ⟩ = 3·|σ/θ - λ|²
        let least = Rational::new(cost, &st.den * &st.den);
        let representative = if sigma.norm() == least {
            sigma.clone()
        } else {
            sigma - &nearest.scale(&EisensteinInt::theta())
        };
        let tag = if least.is_zero() {
            CosetTag::Zero
        } else if least == Rational::from_integer(6.into()) {
            CosetTag::Norm6
        } else if least == Rational::from_integer(9.into()) {
            CosetTag::Norm9
        } else {
            return Err(LeechError::ClassificationFailed(least.to_string()));
        };
        Ok(LeechCosetClass { tag, representative })
    }

    /// Number of lattice vectors of norm exactly `norm` (0 counts the zero
    /// vector once). Exhaustive; norm 6 takes seconds, norm 9 much longer.
    pub fn min_vectors(&self, norm: i64) -> u64 {
        if norm < 0 {
            return 0;
        }
        let st = ScaledTarget::new(&vec![CycloElem::zero(); 12]);
        let want = BigInt::from(3 * norm);
        let mut count = 0u64;
        self.decoder.visit(&st, &want, |_, cost| {
            if cost == &want {
                count += 1;
            }
        });
        count
    }
}
