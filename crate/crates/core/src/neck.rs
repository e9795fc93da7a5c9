//! The fixed-phase circle bundle over the double locus, its restrictions,
//! character quotients and the exact phase algebra of `t = uv`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gaussian::GaussianScalar;
use crate::quadric::{intersection_number, Bidegree, QuadricClass, Ruling};

/// Sign applied to the raw fibre pairing so that the fixed-phase bundle
/// restricts to the Hopf fibration with `c₁ = +1`.
pub const FIBRE_ORIENTATION: i64 = -1;

/// A circle bundle described by its first Chern class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircleBundleClass {
    Quadric { c1: QuadricClass },
    RulingFibre { c1: BigInt },
    Curve { curve: Bidegree, c1: BigInt },
}

impl CircleBundleClass {
    pub fn quadric_c1(&self) -> Result<&QuadricClass> {
        match self {
            CircleBundleClass::Quadric { c1 } => Ok(c1),
            _ => Err(Error::InvalidArgument("bundle is not over the quadric".into())),
        }
    }

    /// The integer `c₁` of a bundle over a curve.
    pub fn degree(&self) -> Option<&BigInt> {
        match self {
            CircleBundleClass::Quadric { .. } => None,
            CircleBundleClass::RulingFibre { c1 } | CircleBundleClass::Curve { c1, .. } => Some(c1),
        }
    }
}

/// The unit circle bundle of `N_{Q/Z̃₁} ≅ O_Q(−1)`, with `c₁ = −ξ`.
pub fn kn_fixed_phase_bundle() -> CircleBundleClass {
    CircleBundleClass::Quadric {
        c1: QuadricClass::xi().neg(),
    }
}

/// Unoriented pairing of `c₁` with a fibre of `g: Q → ℓ`.
pub fn fibre_pairing_raw(b: &CircleBundleClass) -> Result<BigInt> {
    intersection_number(b.quadric_c1()?, &Ruling::GFibre.fibre_class())
}

/// Restriction to a ruling fibre, with the orientation convention applied.
pub fn restrict_to_ruling_fibre_bundle(b: &CircleBundleClass) -> Result<CircleBundleClass> {
    Ok(CircleBundleClass::RulingFibre {
        c1: fibre_pairing_raw(b)? * FIBRE_ORIENTATION,
    })
}

/// Restriction to a curve of bidegree `(a, b)`.
pub fn restrict_to_curve(b: &CircleBundleClass, curve: Bidegree) -> Result<CircleBundleClass> {
    Ok(CircleBundleClass::Curve {
        curve,
        c1: intersection_number(b.quadric_c1()?, &curve.class())?,
    })
}

/// `c₁` of the quotient of a `T²`-bundle with Chern vector `(c⁽¹⁾, c⁽²⁾)`
/// by the character `(a, b)`: `a·c⁽¹⁾ + b·c⁽²⁾`.
pub fn character_quotient(chern_vector: (i64, i64), character: (i64, i64)) -> i64 {
    character.0 * chern_vector.0 + character.1 * chern_vector.1
}

/// Total spaces of circle bundles over `S²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThreeManifoldTag {
    S3,
    RP3,
    S2xS1,
    /// `L(n, 1)` for `n ≥ 3`.
    Lens(u64),
}

impl fmt::Display for ThreeManifoldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThreeManifoldTag::S3 => f.write_str("S3"),
            ThreeManifoldTag::RP3 => f.write_str("RP3"),
            ThreeManifoldTag::S2xS1 => f.write_str("S2xS1"),
            ThreeManifoldTag::Lens(n) => write!(f, "L({n},1)"),
        }
    }
}

impl Serialize for ThreeManifoldTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn lens_space_of(c1: &BigInt) -> ThreeManifoldTag {
    let n = c1.abs();
    match n.to_u64() {
        Some(0) => ThreeManifoldTag::S2xS1,
        Some(1) => ThreeManifoldTag::S3,
        Some(2) => ThreeManifoldTag::RP3,
        Some(k) => ThreeManifoldTag::Lens(k),
        None => ThreeManifoldTag::Lens(u64::MAX),
    }
}

/// Quotient over a ruling fibre of the product of the fixed-phase bundle
/// and the Hopf bundle by `character`.
pub fn quotient_over_fibre(character: (i64, i64)) -> Result<(i64, ThreeManifoldTag)> {
    let kn = restrict_to_ruling_fibre_bundle(&kn_fixed_phase_bundle())?;
    let kn_c1 = kn
        .degree()
        .and_then(|d| d.to_i64())
        .expect("fibre degree is small");
    let hopf_c1 = 1;
    let c1 = character_quotient((kn_c1, hopf_c1), character);
    Ok((c1, lens_space_of(&BigInt::from(c1))))
}

/// The anti-diagonal quotient, character `(1, 1)`.
pub fn antidiagonal_quotient_over_fibre() -> ThreeManifoldTag {
    quotient_over_fibre((1, 1)).expect("built-in bundle").1
}

/// Phases `(ρ₁, ρ₂)` on the two branches with `ρ₁ρ₂ = e^{iθ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhasePair {
    pub rho1: GaussianScalar,
    pub rho2: GaussianScalar,
    pub theta_unit: GaussianScalar,
}

impl PhasePair {
    pub fn holds(&self) -> bool {
        &self.rho1 * &self.rho2 == self.theta_unit
    }
}

/// `ρ₁ = e^{iθ} / ρ₂`.
pub fn phase_solve(theta_unit: &GaussianScalar, rho2: &GaussianScalar) -> Result<PhasePair> {
    theta_unit.expect_unit()?;
    rho2.expect_unit()?;
    let rho1 = theta_unit.checked_div(rho2).expect("unit is invertible");
    let pair = PhasePair {
        rho1,
        rho2: rho2.clone(),
        theta_unit: theta_unit.clone(),
    };
    assert!(pair.holds());
    Ok(pair)
}

/// A complex number stored as squared modulus and unit phase.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarData {
    #[serde(serialize_with = "ser_rational")]
    pub modulus_sq: BigRational,
    pub phase: GaussianScalar,
}

fn ser_rational<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&format!("{}/{}", r.numer(), r.denom()))
}

/// `u = √ρ·e^{iθ}η⁻¹`, `v = √ρ·η` as (squared modulus, phase) data.
pub fn neck_point(
    rho_sq: &BigRational,
    theta_unit: &GaussianScalar,
    eta: &GaussianScalar,
) -> Result<(PolarData, PolarData)> {
    if rho_sq.is_negative() {
        return Err(Error::NegativeModulus(rho_sq.to_string()));
    }
    let pair = phase_solve(theta_unit, eta)?;
    let u = PolarData {
        modulus_sq: rho_sq.clone(),
        phase: pair.rho1,
    };
    let v = PolarData {
        modulus_sq: rho_sq.clone(),
        phase: pair.rho2,
    };
    assert!(u.modulus_sq == *rho_sq && v.modulus_sq == *rho_sq);
    assert_eq!(&u.phase * &v.phase, *theta_unit);
    Ok((u, v))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecoratedPoint {
    pub id: String,
    pub rho1: GaussianScalar,
    pub rho2: GaussianScalar,
}

/// A phase decoration of a finite set of points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decoration {
    pub theta: GaussianScalar,
    pub points: Vec<DecoratedPoint>,
}

/// Input for [`phase_decoration`] as read from a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecorationRequest {
    pub theta: GaussianScalar,
    pub points: Vec<DecorationRequestPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecorationRequestPoint {
    pub id: String,
    pub eta: GaussianScalar,
}

pub fn phase_decoration(
    points: &[String],
    theta_unit: &GaussianScalar,
    eta_choices: &[GaussianScalar],
) -> Result<Decoration> {
    if points.len() != eta_choices.len() {
        return Err(Error::LengthMismatch(points.len(), eta_choices.len()));
    }
    theta_unit.expect_unit()?;
    let points = points
        .iter()
        .zip(eta_choices)
        .map(|(id, eta)| {
            let p = phase_solve(theta_unit, eta)?;
            Ok(DecoratedPoint {
                id: id.clone(),
                rho1: p.rho1,
                rho2: p.rho2,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Decoration {
        theta: theta_unit.clone(),
        points,
    })
}

impl DecorationRequest {
    pub fn solve(&self) -> Result<Decoration> {
        let ids: Vec<String> = self.points.iter().map(|p| p.id.clone()).collect();
        let etas: Vec<GaussianScalar> = self.points.iter().map(|p| p.eta.clone()).collect();
        phase_decoration(&ids, &self.theta, &etas)
    }
}

/// True iff `x` is zero; used for the degenerate point `ρ = 0`.
pub fn is_limit_point(u: &PolarData) -> bool {
    u.modulus_sq.is_zero()
}
