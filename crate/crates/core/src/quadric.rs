//! The Chow ring of the exceptional quadric `Q ≅ ℙ¹×ℙ¹`.
//!
//! Internally classes use the basis `1; b, w; pt` with `b² = w² = 0` and
//! `bw = pt`. Here `b` is the fibre class of the projection `g: Q → ℓ` and
//! `w` the class of the other ruling. The alternative degree-1 basis
//! `(z, w)` with `z = b − w` is available for display and input.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{int_vec, IntMatrix};
use crate::ring::{same_ring, GradedMap, GradedRing, MultEntry, RingElement};

pub const LABEL_B: &str = "b";
pub const LABEL_W: &str = "w";
pub const LABEL_PT: &str = "pt";

/// Builds `CH•(ℙ¹×ℙ¹)` with ranks `(1, 2, 1)` and `deg(pt) = 1`.
pub fn build_quadric_ring() -> Arc<GradedRing> {
    let basis = vec![
        vec!["1".to_string()],
        vec![LABEL_B.to_string(), LABEL_W.to_string()],
        vec![LABEL_PT.to_string()],
    ];
    let entries = vec![
        MultEntry { d1: 1, i1: 0, d2: 1, i2: 0, out: int_vec(&[0]) },
        MultEntry { d1: 1, i1: 0, d2: 1, i2: 1, out: int_vec(&[1]) },
        MultEntry { d1: 1, i1: 1, d2: 1, i2: 1, out: int_vec(&[0]) },
    ];
    GradedRing::from_table(basis, entries, Some(int_vec(&[1]))).expect("quadric table is valid")
}

/// Shared instance of [`build_quadric_ring`].
pub fn quadric_ring() -> &'static Arc<GradedRing> {
    static RING: OnceLock<Arc<GradedRing>> = OnceLock::new();
    RING.get_or_init(build_quadric_ring)
}

/// Presentation basis for degree 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisMode {
    /// `(b, w)`, the internal basis.
    Bw,
    /// `(z, w)` with `z = b − w`.
    Zw,
}

/// A class in `CH•(Q)`. The basis mode only affects presentation;
/// equality compares the underlying element.
#[derive(Clone, Debug)]
pub struct QuadricClass {
    element: RingElement,
    mode: BasisMode,
}

impl PartialEq for QuadricClass {
    fn eq(&self, other: &Self) -> bool {
        self.element == other.element
    }
}

impl Eq for QuadricClass {}

impl QuadricClass {
    /// Wraps an element of the quadric ring.
    pub fn new(element: RingElement) -> Result<Self> {
        if !same_ring(element.ring(), quadric_ring()) {
            return Err(Error::RingMismatch);
        }
        Ok(QuadricClass {
            element,
            mode: BasisMode::Bw,
        })
    }

    /// `c0·1 + m·b + n·w + p·pt`.
    pub fn from_parts(c0: BigInt, m: BigInt, n: BigInt, p: BigInt) -> Self {
        let element =
            RingElement::from_coeffs(quadric_ring(), vec![vec![c0], vec![m, n], vec![p]])
                .expect("quadric shape");
        QuadricClass {
            element,
            mode: BasisMode::Bw,
        }
    }

    /// The divisor class `m·b + n·w`.
    pub fn divisor(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        Self::from_parts(BigInt::zero(), m.into(), n.into(), BigInt::zero())
    }

    /// The divisor class `p·z + q·w`, i.e. `p·b + (q − p)·w`.
    pub fn divisor_zw(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        let (p, q) = (p.into(), q.into());
        let n = &q - &p;
        Self::divisor(p, n).with_mode(BasisMode::Zw)
    }

    pub fn zero() -> Self {
        Self::from_parts(BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero())
    }

    pub fn one() -> Self {
        Self::from_parts(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::zero())
    }

    pub fn b() -> Self {
        Self::divisor(1, 0)
    }

    pub fn w() -> Self {
        Self::divisor(0, 1)
    }

    pub fn z() -> Self {
        Self::divisor(1, -1).with_mode(BasisMode::Zw)
    }

    /// `ξ = c₁(O_Q(1)) = b + w = z + 2w`.
    pub fn xi() -> Self {
        Self::divisor(1, 1)
    }

    pub fn point() -> Self {
        Self::from_parts(BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    pub fn with_mode(mut self, mode: BasisMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn mode(&self) -> BasisMode {
        self.mode
    }

    pub fn element(&self) -> &RingElement {
        &self.element
    }

    pub fn into_element(self) -> RingElement {
        self.element
    }

    /// Degree-1 coordinates `(m, n)` in the `(b, w)` basis.
    pub fn bw_coords(&self) -> (BigInt, BigInt) {
        let v = self.element.part(1);
        (v[0].clone(), v[1].clone())
    }

    /// Degree-1 coordinates `(p, q)` in the `(z, w)` basis: `m·b + n·w =
    /// m·z + (m + n)·w`.
    pub fn zw_coords(&self) -> (BigInt, BigInt) {
        let (m, n) = self.bw_coords();
        let q = &m + &n;
        (m, q)
    }

    pub fn unit_coeff(&self) -> &BigInt {
        &self.element.part(0)[0]
    }

    pub fn point_coeff(&self) -> &BigInt {
        &self.element.part(2)[0]
    }

    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }

    pub fn add(&self, other: &QuadricClass) -> QuadricClass {
        self.lift(self.element.add(&other.element).expect("same ring"))
    }

    pub fn sub(&self, other: &QuadricClass) -> QuadricClass {
        self.lift(self.element.sub(&other.element).expect("same ring"))
    }

    pub fn neg(&self) -> QuadricClass {
        self.lift(self.element.neg())
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> QuadricClass {
        self.lift(self.element.scale(&c.into()))
    }

    pub fn mul(&self, other: &QuadricClass) -> QuadricClass {
        self.lift(self.element.mul(&other.element).expect("same ring"))
    }

    fn lift(&self, element: RingElement) -> QuadricClass {
        QuadricClass {
            element,
            mode: self.mode,
        }
    }

    /// Degree of the `pt` component.
    pub fn degree(&self) -> BigInt {
        self.element.degree_of_cycle().expect("quadric has a degree functional")
    }
}

impl fmt::Display for QuadricClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            BasisMode::Bw => self.element.fmt(f),
            BasisMode::Zw => {
                let (p, q) = self.zw_coords();
                let terms = [
                    (self.unit_coeff().clone(), "1"),
                    (p, "z"),
                    (q, "w"),
                    (self.point_coeff().clone(), "pt"),
                ];
                write_terms(f, &terms)
            }
        }
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(BigInt, &str)]) -> fmt::Result {
    let mut first = true;
    for (c, label) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigInt::zero();
        let mag = if neg { -c } else { c.clone() };
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        if mag.is_one() {
            f.write_str(label)?;
        } else {
            write!(f, "{mag}·{label}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// The ruling swap `σ` as a ring automorphism of `CH•(Q)`.
pub fn sigma_map() -> GradedMap {
    let r = quadric_ring();
    GradedMap::new(
        r.clone(),
        r.clone(),
        0,
        vec![
            IntMatrix::identity(1),
            IntMatrix::from_i64(&[&[0, 1], &[1, 0]]),
            IntMatrix::identity(1),
        ],
        true,
    )
    .expect("swap is a ring automorphism")
}

/// `σ_*`: swaps `b` and `w`, fixing `1` and `pt`.
pub fn sigma_pushforward(x: &QuadricClass) -> QuadricClass {
    let (m, n) = x.bw_coords();
    QuadricClass::from_parts(x.unit_coeff().clone(), n, m, x.point_coeff().clone()).with_mode(x.mode)
}

/// `σ^*`, the inverse of [`sigma_pushforward`]. The swap is an involution,
/// so the two agree.
pub fn sigma_pullback(x: &QuadricClass) -> QuadricClass {
    sigma_pushforward(x)
}

/// Intersection number of two divisor classes.
pub fn intersection_number(x: &QuadricClass, y: &QuadricClass) -> Result<BigInt> {
    x.element.expect_degree(1)?;
    y.element.expect_degree(1)?;
    Ok(x.mul(y).degree())
}

/// Divisor bidegree `(m, n)`, i.e. the class `m·b + n·w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bidegree {
    pub m: i64,
    pub n: i64,
}

impl Bidegree {
    pub fn new(m: i64, n: i64) -> Self {
        Bidegree { m, n }
    }

    pub fn class(self) -> QuadricClass {
        QuadricClass::divisor(self.m, self.n)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// `p_a(D) = (m − 1)(n − 1)`.
pub fn arithmetic_genus(d: Bidegree) -> i64 {
    (d.m - 1) * (d.n - 1)
}

/// `K_Q = −2b − 2w`.
pub fn canonical_class() -> QuadricClass {
    QuadricClass::divisor(-2, -2)
}

/// The two rulings of `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ruling {
    /// Fibres of `g: Q → ℓ`, class `b`.
    GFibre,
    /// The complementary ruling, class `w`.
    Complementary,
}

impl Ruling {
    pub fn fibre_class(self) -> QuadricClass {
        match self {
            Ruling::GFibre => QuadricClass::b(),
            Ruling::Complementary => QuadricClass::w(),
        }
    }
}

/// Degree of `O(m, n)` on a fibre of the given ruling.
pub fn restrict_to_ruling_fibre(d: Bidegree, ruling: Ruling) -> i64 {
    match ruling {
        Ruling::GFibre => d.n,
        Ruling::Complementary => d.m,
    }
}

/// `(h⁰, h¹, h²)` of a line bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohomologyDims {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

impl CohomologyDims {
    pub fn euler_characteristic(self) -> i64 {
        self.h0 - self.h1 + self.h2
    }

    pub fn reversed(self) -> CohomologyDims {
        CohomologyDims {
            h0: self.h2,
            h1: self.h1,
            h2: self.h0,
        }
    }
}

fn p1_h0(n: i64) -> i64 {
    (n + 1).max(0)
}

fn p1_h1(n: i64) -> i64 {
    (-n - 1).max(0)
}

/// Cohomology of `O_Q(a, b)` by Künneth from the two `ℙ¹` factors.
pub fn cohomology_dims(a: i64, b: i64) -> CohomologyDims {
    CohomologyDims {
        h0: p1_h0(a) * p1_h0(b),
        h1: p1_h0(a) * p1_h1(b) + p1_h1(a) * p1_h0(b),
        h2: p1_h1(a) * p1_h1(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn relations() {
        assert!(QuadricClass::b().mul(&QuadricClass::b()).is_zero());
        assert!(QuadricClass::w().mul(&QuadricClass::w()).is_zero());
        assert_eq!(QuadricClass::b().mul(&QuadricClass::w()), QuadricClass::point());
        let z = QuadricClass::z();
        let zw = z.mul(&QuadricClass::w());
        assert_eq!(z.mul(&z), zw.scale(-2));
        assert_eq!(QuadricClass::divisor_zw(1, 2), QuadricClass::xi());
    }

    #[test]
    fn sigma() {
        assert_eq!(sigma_pushforward(&QuadricClass::w()), QuadricClass::b());
        assert_eq!(sigma_pushforward(&QuadricClass::z()), QuadricClass::z().neg());
        assert_eq!(sigma_pushforward(&QuadricClass::xi()), QuadricClass::xi());
        assert!(sigma_map().homomorphism_defects().is_empty());
    }

    #[test]
    fn zw_display() {
        assert_eq!(canonical_class().with_mode(BasisMode::Zw).to_string(), "-2·z - 4·w");
        assert_eq!(canonical_class().to_string(), "-2·b - 2·w");
    }

    #[test]
    fn intersection_rejects_wrong_degree() {
        assert!(intersection_number(&QuadricClass::point(), &QuadricClass::b()).is_err());
        let d = 4;
        let t = QuadricClass::divisor(d - 1, 1);
        assert_eq!(intersection_number(&t, &QuadricClass::xi()).unwrap(), big(d));
    }

    #[test]
    fn cohomology_examples() {
        assert_eq!(cohomology_dims(0, 0), CohomologyDims { h0: 1, h1: 0, h2: 0 });
        assert_eq!(cohomology_dims(-2, -2), CohomologyDims { h0: 0, h1: 0, h2: 1 });
        assert_eq!(cohomology_dims(-3, 1).h1, 4);
    }

    #[test]
    fn fibre_restriction() {
        assert_eq!(restrict_to_ruling_fibre(Bidegree::new(1, 1), Ruling::GFibre), 1);
        assert_eq!(restrict_to_ruling_fibre(Bidegree::new(-1, -1), Ruling::GFibre), -1);
        assert_eq!(restrict_to_ruling_fibre(Bidegree::new(3, 2), Ruling::Complementary), 3);
    }
}
