use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{ip, AmbientVector, LorentzError};
use crate::field::{rat, rint, EisensteinInt, FieldElem, Rational, RealQuad};
use crate::leech::{self, LeechPoint};

/// A norm-3 vector of L: integral coordinates with `σ ∈ Λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AmbientVector", into = "AmbientVector")]
pub struct Root(AmbientVector);

impl TryFrom<AmbientVector> for Root {
    type Error = LorentzError;
    fn try_from(v: AmbientVector) -> Result<Self, LorentzError> {
        Root::new(v)
    }
}

impl From<Root> for AmbientVector {
    fn from(r: Root) -> AmbientVector {
        r.0
    }
}

impl std::fmt::Display for Root {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// `v` lies in L: coordinates in ℰ and Leech part in Λ.
pub fn in_lattice(v: &AmbientVector) -> bool {
    v.to_integral().is_some_and(|(sigma, _, _)| leech::standard().contains(&sigma))
}

impl Root {
    pub fn new(v: AmbientVector) -> Result<Self, LorentzError> {
        if !in_lattice(&v) {
            return Err(LorentzError::NotARoot(format!("{v} is not in L")));
        }
        let n = v.norm();
        if n != RealQuad::from_int(3) {
            return Err(LorentzError::NotARoot(format!("{v} has norm {n}")));
        }
        Ok(Root(v))
    }

    pub fn integral(sigma: &LeechPoint, y: EisensteinInt, z: EisensteinInt) -> Result<Self, LorentzError> {
        Root::new(AmbientVector::integral(sigma, y, z))
    }

    pub fn vector(&self) -> &AmbientVector {
        &self.0
    }

    pub fn sigma(&self) -> LeechPoint {
        self.parts().0
    }

    /// The middle coordinate; `⟨ρ, s⟩ = θ m̄`.
    pub fn m(&self) -> EisensteinInt {
        self.parts().1
    }

    pub fn parts(&self) -> (LeechPoint, EisensteinInt, EisensteinInt) {
        self.0.to_integral().expect("roots are integral")
    }

    /// `|⟨ρ, s⟩|² = 3|m|²`, the quantity the reduction lowers.
    pub fn rho_height(&self) -> BigInt {
        BigInt::from(3) * self.m().norm()
    }

    /// `u·s` for a unit `u`.
    pub fn scale_unit(&self, u: &EisensteinInt) -> Root {
        assert!(u.is_unit(), "scaling by a non-unit leaves the roots");
        Root(self.0.scale(&FieldElem::from(u)))
    }

    /// The associate whose `m` is canonical, with the unit used.
    pub fn canonical_associate(&self) -> (Root, EisensteinInt) {
        let (_, u) = self.m().canonical_associate();
        (self.scale_unit(&u), u)
    }

    /// `(λ, ν_l)` when `m = 1`.
    pub fn leech_spec(&self) -> Option<LeechRootSpec> {
        if self.m() != EisensteinInt::one() {
            return None;
        }
        let d = decompose(&self.0).expect("m = 1");
        Some(LeechRootSpec { lambda: self.sigma(), nu_l: d.nu })
    }
}

/// `|⟨ρ, s⟩|² = 3`, equivalently `|m| = 1`.
pub fn is_leech_root(s: &Root) -> bool {
    s.m().norm().is_one()
}

/// The data `(σ, m, N, ν)` with `s = (σ; m, (θ/m̄)((σ² - N)/6 + ν))`, `N = s²`
/// and `ν` imaginary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub sigma: [FieldElem; 12],
    pub m: FieldElem,
    #[serde(rename = "N")]
    pub n: RealQuad,
    pub nu: FieldElem,
}

impl Decomposition {
    pub fn sigma_vector(&self) -> AmbientVector {
        AmbientVector::leech_part(self.sigma.clone())
    }

    pub fn sigma_norm(&self) -> RealQuad {
        self.sigma_vector().sigma_norm()
    }

    pub fn m_sq(&self) -> RealQuad {
        self.m.abs_sq()
    }
}

pub fn decompose(s: &AmbientVector) -> Result<Decomposition, LorentzError> {
    if s.y.is_zero() {
        return Err(LorentzError::InRhoPerp);
    }
    let n = s.norm();
    let sigma_sq = s.sigma_norm();
    let theta = FieldElem::theta();
    // Re(z m̄ / θ) = (σ² - N)/6 because s² = σ² + 2 Re(z θ m̄)
    let shift = FieldElem::from(&(&sigma_sq - &n)).scale(&rat(1, 6));
    let nu = &s.z * &s.y.conj() / theta - shift;
    debug_assert!(nu.is_imaginary());
    Ok(Decomposition { sigma: s.sigma.clone(), m: s.y.clone(), n, nu })
}

pub fn recompose(d: &Decomposition) -> AmbientVector {
    let theta = FieldElem::theta();
    let inner = FieldElem::from(&(&d.sigma_norm() - &d.n)).scale(&rat(1, 6)) + &d.nu;
    let z = &theta / &d.m.conj() * inner;
    AmbientVector::new(d.sigma.clone(), d.m.clone(), z)
}

/// A Leech root `(λ; 1, θ((λ² - 3)/6 + ν_l))`.
///
/// Writing `ν_l = t/θ`, integrality forces `t ∈ ½ + ℤ` when `6 | λ²` and
/// `t ∈ ℤ` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeechRootSpec {
    pub lambda: LeechPoint,
    pub nu_l: FieldElem,
}

impl LeechRootSpec {
    pub fn from_t(lambda: LeechPoint, t: Rational) -> Self {
        let nu_l = FieldElem::from_rational(t) / FieldElem::theta();
        LeechRootSpec { lambda, nu_l }
    }

    /// `t = θν_l`, rational for admissible specs.
    pub fn t(&self) -> Option<Rational> {
        let r = (&self.nu_l * &FieldElem::theta()).to_real()?;
        r.is_rational().then_some(r.p)
    }

    /// `½` when `6 | λ²`, else `0`: the offset of the admissible `t`.
    pub fn t_offset(lambda: &LeechPoint) -> Rational {
        let n = lambda.norm();
        if n.to_integer().is_even() {
            rat(1, 2)
        } else {
            Rational::zero()
        }
    }

    pub fn validate(&self) -> Result<(), LorentzError> {
        if !leech::standard().contains(&self.lambda) {
            return Err(LorentzError::InvalidNu("lambda is not in the Leech lattice".into()));
        }
        let Some(t) = self.t() else {
            return Err(LorentzError::InvalidNu(format!("theta * nu_l = {} is not rational", &self.nu_l * &FieldElem::theta())));
        };
        if !(&t - Self::t_offset(&self.lambda)).is_integer() {
            return Err(LorentzError::InvalidNu(format!("theta * nu_l = {t} is in the wrong class for lambda^2 = {}", self.lambda.norm())));
        }
        Ok(())
    }

    /// `(λ; 1, θ((λ² - 3)/6 + ν_l))` without the admissibility checks.
    pub fn vector(&self) -> AmbientVector {
        recompose(&Decomposition {
            sigma: std::array::from_fn(|i| FieldElem::from(&self.lambda.coords[i])),
            m: FieldElem::one(),
            n: RealQuad::from_int(3),
            nu: self.nu_l.clone(),
        })
    }

    /// The spec with `t` shifted by `k`, still admissible.
    pub fn shifted(&self, k: i64) -> Self {
        let t = self.t().expect("admissible spec") + rint(k);
        LeechRootSpec::from_t(self.lambda.clone(), t)
    }
}

pub fn leech_root(spec: &LeechRootSpec) -> Result<Root, LorentzError> {
    spec.validate()?;
    let v = spec.vector();
    debug_assert!(ip(&v, &v) == FieldElem::from_int(3));
    Root::new(v)
}
