//! The real structure `τ` on `Q = ℙ¹×ℙ¹` and the sections of `O(1,1)` it
//! preserves.
//!
//! `τ([z₀:z₁],[w₀:w₁]) = ([−z̄₁:z̄₀],[−w̄₁:w̄₀])`, applied with exactly this
//! representative. Sections are written `a·z₀w₀ + b·z₀w₁ + c·z₁w₀ + d·z₁w₁`.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gaussian::GaussianScalar;
use crate::json::JsonRational;

/// A point of `ℙ¹` over `ℚ(i)`, compared projectively.
#[derive(Clone, Debug)]
pub struct ProjPair(pub GaussianScalar, pub GaussianScalar);

impl ProjPair {
    pub fn new(x0: GaussianScalar, x1: GaussianScalar) -> Result<Self> {
        if x0.is_zero() && x1.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(ProjPair(x0, x1))
    }

    /// `[x₀ : x₁] = [y₀ : y₁]` iff `x₀y₁ = x₁y₀`.
    pub fn proj_eq(&self, other: &ProjPair) -> bool {
        &self.0 * &other.1 == &self.1 * &other.0
    }

    pub fn conj(&self) -> ProjPair {
        ProjPair(self.0.conj(), self.1.conj())
    }

    /// `[−x̄₁ : x̄₀]`.
    pub fn antipode(&self) -> ProjPair {
        ProjPair(-self.1.conj(), self.0.conj())
    }
}

impl PartialEq for ProjPair {
    fn eq(&self, other: &Self) -> bool {
        self.proj_eq(other)
    }
}

impl Eq for ProjPair {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricPoint {
    pub z: ProjPair,
    pub w: ProjPair,
}

impl QuadricPoint {
    pub fn new(z0: GaussianScalar, z1: GaussianScalar, w0: GaussianScalar, w1: GaussianScalar) -> Result<Self> {
        Ok(QuadricPoint {
            z: ProjPair::new(z0, z1)?,
            w: ProjPair::new(w0, w1)?,
        })
    }

    pub fn coords(&self) -> [&GaussianScalar; 4] {
        [&self.z.0, &self.z.1, &self.w.0, &self.w.1]
    }
}

pub fn tau(p: &QuadricPoint) -> QuadricPoint {
    QuadricPoint {
        z: p.z.antipode(),
        w: p.w.antipode(),
    }
}

pub fn is_fixed_point(p: &QuadricPoint) -> bool {
    tau(p) == *p
}

/// A section of `O(1,1)` in the monomial basis `z₀w₀, z₀w₁, z₁w₀, z₁w₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section11 {
    pub a: GaussianScalar,
    pub b: GaussianScalar,
    pub c: GaussianScalar,
    pub d: GaussianScalar,
}

impl Section11 {
    pub fn new(a: GaussianScalar, b: GaussianScalar, c: GaussianScalar, d: GaussianScalar) -> Self {
        Section11 { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    /// `s₁ = z₀w₀ + z₁w₁`.
    pub fn s1() -> Self {
        Self::from_ints(1, 0, 0, 1)
    }

    /// `s₂ = z₀w₁ − z₁w₀`.
    pub fn s2() -> Self {
        Self::from_ints(0, 1, -1, 0)
    }

    pub fn coeffs(&self) -> [&GaussianScalar; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn scale(&self, l: &GaussianScalar) -> Self {
        Self::new(l * &self.a, l * &self.b, l * &self.c, l * &self.d)
    }

    pub fn add(&self, o: &Section11) -> Self {
        Self::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }

    /// Real and imaginary parts of `a, b, c, d` as a vector in `ℚ⁸`.
    pub fn real_coordinates(&self) -> [BigRational; 8] {
        let [a, b, c, d] = self.coeffs();
        [
            a.re.clone(),
            a.im.clone(),
            b.re.clone(),
            b.im.clone(),
            c.re.clone(),
            c.im.clone(),
            d.re.clone(),
            d.im.clone(),
        ]
    }
}

/// `(a, b, c, d) ↦ (d̄, −c̄, −b̄, ā)`.
pub fn tau_tilde(s: &Section11) -> Section11 {
    Section11::new(s.d.conj(), -s.c.conj(), -s.b.conj(), s.a.conj())
}

/// `d = ā` and `c = −b̄`.
pub fn is_invariant_section(s: &Section11) -> bool {
    s.d == s.a.conj() && s.c == -s.b.conj()
}

/// `[a₁ + ia₂ : b₁ + ib₂ : −b₁ + ib₂ : a₁ − ia₂]`.
pub fn fixed_space_embedding(a1: &BigRational, a2: &BigRational, b1: &BigRational, b2: &BigRational) -> Result<Section11> {
    if a1.is_zero() && a2.is_zero() && b1.is_zero() && b2.is_zero() {
        return Err(Error::ZeroVector);
    }
    let s = Section11::new(
        GaussianScalar::new(a1.clone(), a2.clone()),
        GaussianScalar::new(b1.clone(), b2.clone()),
        GaussianScalar::new(-b1, b2.clone()),
        GaussianScalar::new(a1.clone(), -a2),
    );
    assert!(is_invariant_section(&s));
    Ok(s)
}

/// Inverse of [`fixed_space_embedding`] on invariant sections.
pub fn invariant_coordinates(s: &Section11) -> Option<[BigRational; 4]> {
    is_invariant_section(s).then(|| [s.a.re.clone(), s.a.im.clone(), s.b.re.clone(), s.b.im.clone()])
}

/// Images of the standard basis of `ℝ⁴` (over `ℚ`).
pub fn invariant_section_basis() -> Vec<Section11> {
    let one = || BigRational::from_integer(1.into());
    let zero = BigRational::zero;
    vec![
        fixed_space_embedding(&one(), &zero(), &zero(), &zero()).unwrap(),
        fixed_space_embedding(&zero(), &one(), &zero(), &zero()).unwrap(),
        fixed_space_embedding(&zero(), &zero(), &one(), &zero()).unwrap(),
        fixed_space_embedding(&zero(), &zero(), &zero(), &one()).unwrap(),
    ]
}

/// Evaluation on the stored representative of `p`.
pub fn evaluate_section(s: &Section11, p: &QuadricPoint) -> GaussianScalar {
    let [z0, z1, w0, w1] = p.coords();
    &(&(&s.a * &(z0 * w0)) + &(&s.b * &(z0 * w1))) + &(&(&s.c * &(z1 * w0)) + &(&s.d * &(z1 * w1)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PencilValue {
    Value(ProjPair),
    BasePoint,
}

/// `h(p) = [s₁(p) : −s₂(p)]`.
pub fn pencil_value(p: &QuadricPoint) -> PencilValue {
    let v1 = evaluate_section(&Section11::s1(), p);
    let v2 = -evaluate_section(&Section11::s2(), p);
    match ProjPair::new(v1, v2) {
        Ok(pair) => PencilValue::Value(pair),
        Err(_) => PencilValue::BasePoint,
    }
}

/// Common zeros of `s₁` and `s₂`.
///
/// If `z₀ = 0` then `s₁ = z₁w₁` and `s₂ = −z₁w₀` force `w = 0`, so
/// `z = [1 : t]`. Then `s₂ = 0` gives `w₁ = t·w₀` and `s₁ = 0` gives
/// `(1 + t²)·w₀ = 0`, so `t² = −1` and `w = [1 : t]`.
pub fn base_locus() -> Vec<QuadricPoint> {
    let minus_one = GaussianScalar::from_ints(-1, 0);
    let t = minus_one.sqrt().expect("−1 is a square in ℚ(i)");
    let mut roots = vec![t.clone(), -t];
    roots.sort_by(|x, y| y.im.cmp(&x.im));
    roots
        .into_iter()
        .map(|t| {
            let p = QuadricPoint::new(GaussianScalar::one(), t.clone(), GaussianScalar::one(), t).unwrap();
            debug_assert!(evaluate_section(&Section11::s1(), &p).is_zero());
            debug_assert!(evaluate_section(&Section11::s2(), &p).is_zero());
            p
        })
        .collect()
}

fn scalar_to_json(x: &GaussianScalar) -> [JsonRational; 2] {
    [JsonRational(x.re.clone()), JsonRational(x.im.clone())]
}

fn scalar_from_json(x: &[JsonRational; 2]) -> GaussianScalar {
    GaussianScalar::new(x[0].0.clone(), x[1].0.clone())
}

/// Points serialize as `[z₀, z₁, w₀, w₁]`, each `["re", "im"]`.
impl Serialize for QuadricPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().map(scalar_to_json).serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadricPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [z0, z1, w0, w1] = <[[JsonRational; 2]; 4]>::deserialize(d)?;
        QuadricPoint::new(
            scalar_from_json(&z0),
            scalar_from_json(&z1),
            scalar_from_json(&w0),
            scalar_from_json(&w1),
        )
        .map_err(serde::de::Error::custom)
    }
}

/// Sections serialize as `[a, b, c, d]`, each `["re", "im"]`.
impl Serialize for Section11 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs().map(scalar_to_json).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Section11 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b, c, dd] = <[[JsonRational; 2]; 4]>::deserialize(d)?;
        Ok(Section11::new(
            scalar_from_json(&a),
            scalar_from_json(&b),
            scalar_from_json(&c),
            scalar_from_json(&dd),
        ))
    }
}

impl Serialize for ProjPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [scalar_to_json(&self.0), scalar_to_json(&self.1)].serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianScalar {
        GaussianScalar::from_ints(re, im)
    }

    fn pt(z0: GaussianScalar, z1: GaussianScalar, w0: GaussianScalar, w1: GaussianScalar) -> QuadricPoint {
        QuadricPoint::new(z0, z1, w0, w1).unwrap()
    }

    #[test]
    fn tau_examples() {
        let p = pt(g(1, 0), g(0, 0), g(1, 0), g(0, 0));
        assert_eq!(tau(&p), pt(g(0, 0), g(1, 0), g(0, 0), g(1, 0)));
        assert!(!is_fixed_point(&p));
        let q = pt(g(1, 0), g(0, 1), g(1, 0), g(0, 1));
        assert_eq!(tau(&q), pt(g(1, 0), g(0, -1), g(1, 0), g(0, -1)));
        assert!(QuadricPoint::new(g(0, 0), g(0, 0), g(1, 0), g(0, 0)).is_err());
    }

    #[test]
    fn sections() {
        assert_eq!(tau_tilde(&Section11::from_ints(1, 0, 0, 0)), Section11::from_ints(0, 0, 0, 1));
        assert_eq!(tau_tilde(&Section11::s1()), Section11::s1());
        assert!(is_invariant_section(&Section11::s2()));
        assert!(!is_invariant_section(&Section11::from_ints(1, 0, 0, 0)));
        let b = invariant_section_basis();
        assert_eq!(b[0], Section11::s1());
        assert_eq!(b[2], Section11::s2());
        assert_eq!(b[1], Section11::new(g(0, 1), g(0, 0), g(0, 0), g(0, -1)));
        let z = BigRational::zero();
        assert!(fixed_space_embedding(&z, &z, &z, &z).is_err());
    }

    #[test]
    fn pencil() {
        let base = base_locus();
        assert_eq!(base.len(), 2);
        assert_eq!(tau(&base[0]), base[1]);
        assert_eq!(pencil_value(&base[0]), PencilValue::BasePoint);
        let p = pt(g(1, 0), g(0, 0), g(0, 0), g(1, 0));
        assert_eq!(
            pencil_value(&p),
            PencilValue::Value(ProjPair::new(g(0, 0), g(1, 0)).unwrap())
        );
    }

    #[test]
    fn json_round_trip() {
        let p = pt(GaussianScalar::from_fractions(1, 2, -3, 4), g(0, 1), g(2, 0), g(0, 0));
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.starts_with(r#"[["1/2","-3/4"]"#), "{s}");
        let back: QuadricPoint = serde_json::from_str(&s).unwrap();
        assert_eq!(back.coords(), p.coords());
        let sec = Section11::s2();
        let back: Section11 = serde_json::from_str(&serde_json::to_string(&sec).unwrap()).unwrap();
        assert_eq!(back, sec);
    }
}
