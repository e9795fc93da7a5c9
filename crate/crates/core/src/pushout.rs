//! Blow-ups of twistor spaces along a twistor line and the operational Chow
//! ring of the glued central fibre.
//!
//! # Blow-up convention
//!
//! For a base `Z` with line class `[ℓ]`, the blown-up ring has basis
//! `f*CH^p(Z)` plus `[Q]` in degree 1 and `E := j_*b` in degree 2. The
//! pushforward is `j_*1 = [Q]`, `j_*b = E`, `j_*w = f*[ℓ] + E` and
//! `j_*pt = f*pt`, and every product follows from
//!
//! - `f*x · f*y = f*(xy)`,
//! - `f*x · j_*γ = j_*(j*f*x · γ)`,
//! - `j_*γ · j_*δ = j_*(γ · j*[Q] · δ)`,
//!
//! with `j*[Q] = −ξ` and `j*f*α = d_α·b` for a degree-1 class `α` of
//! twistor degree `d_α`. In particular `[Q]·f*α = d_α E`, `[Q]·E = −pt`,
//! `f*α·E = 0`, `f*β·[Q] = 0` for degree-2 `β`, and
//! `[Q]² = −f*[ℓ] − 2E`. This is the unique table for which `j*` is a ring
//! homomorphism with the restriction values above; it makes
//! `j_*ξ = f*[ℓ] + 2E` rather than `f*[ℓ]`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{from_json_ints, to_json_ints, JsonInt};
use crate::lattice::{dot, int_vec, integer_kernel, lattice_coordinates, IntMatrix, IntVector};
use crate::quadric::{quadric_ring, sigma_map, sigma_pullback, QuadricClass};
use crate::ring::{same_ring, GradedMap, GradedRing, MultEntry, RingElement, RingJson};

pub const LABEL_Q: &str = "[Q]";
pub const LABEL_E: &str = "j_*b";

/// Chow ring of a twistor space together with its twistor line.
#[derive(Clone, Debug)]
pub struct TwistorChow {
    name: String,
    ring: Arc<GradedRing>,
    line_class: RingElement,
    twistor_degrees: Vec<BigInt>,
    point_class: RingElement,
}

impl TwistorChow {
    /// Validates the base data.
    ///
    /// Besides the shape checks this requires `α·[ℓ] = d_α·pt` for every
    /// degree-1 basis element; the blow-up table is associative only then.
    pub fn new(
        name: impl Into<String>,
        ring: Arc<GradedRing>,
        line_class: RingElement,
        twistor_degrees: Vec<BigInt>,
        point_class: RingElement,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidBase(m));
        if ring.top_degree() != 3 {
            return bad(format!("top degree must be 3, found {}", ring.top_degree()));
        }
        if !same_ring(line_class.ring(), &ring) || !same_ring(point_class.ring(), &ring) {
            return Err(Error::RingMismatch);
        }
        if !line_class.is_homogeneous_of(2) || line_class.is_zero() {
            return bad("line class must be a nonzero class of degree 2".into());
        }
        if !point_class.is_homogeneous_of(3) {
            return bad("point class must have degree 3".into());
        }
        match point_class.degree_of_cycle() {
            Ok(d) if d.is_one() => {}
            Ok(d) => return bad(format!("point class has degree {d}, expected 1")),
            Err(_) => return bad("ring has no degree functional".into()),
        }
        if twistor_degrees.len() != ring.rank(1) {
            return Err(Error::DimensionMismatch {
                expected: ring.rank(1),
                found: twistor_degrees.len(),
            });
        }
        for (i, d) in twistor_degrees.iter().enumerate() {
            let a = RingElement::basis(&ring, 1, i);
            let lhs = a.mul(&line_class)?;
            let rhs = point_class.scale(d);
            if lhs != rhs {
                return bad(format!(
                    "{} · [ℓ] = {} but its twistor degree is {}",
                    ring.label(1, i),
                    lhs,
                    d
                ));
            }
        }
        Ok(TwistorChow {
            name: name.into(),
            ring,
            line_class,
            twistor_degrees,
            point_class,
        })
    }

    /// `CH•(ℙ³) = ℤ[h]/h⁴` with `[ℓ] = h²`.
    pub fn projective_space() -> Self {
        let basis = vec![
            vec!["1".to_string()],
            vec!["h".to_string()],
            vec!["h^2".to_string()],
            vec!["h^3".to_string()],
        ];
        let mut entries = Vec::new();
        for a in 1..=3usize {
            for b in a..=3 - a {
                entries.push(MultEntry { d1: a, i1: 0, d2: b, i2: 0, out: int_vec(&[1]) });
            }
        }
        let ring = GradedRing::from_table(basis, entries, Some(int_vec(&[1]))).expect("ℙ³ table");
        let line = RingElement::basis(&ring, 2, 0);
        let pt = RingElement::basis(&ring, 3, 0);
        TwistorChow::new("P3", ring, line, vec![BigInt::one()], pt).expect("ℙ³ base")
    }

    /// The flag threefold, `ℤ[x,y]/(x²+xy+y², x³)`.
    ///
    /// Basis `x, y; x², y²; pt` with `xy = −x² − y²`, `x·y² = pt`,
    /// `y·x² = −pt` and `x³ = y³ = 0`. The line class is `y² − x²`, which
    /// meets both `x` and `y` in degree 1.
    pub fn flag_threefold() -> Self {
        let basis = vec![
            vec!["1".to_string()],
            vec!["x".to_string(), "y".to_string()],
            vec!["x^2".to_string(), "y^2".to_string()],
            vec!["xy^2".to_string()],
        ];
        let e = |d1, i1, d2, i2, out: &[i64]| MultEntry { d1, i1, d2, i2, out: int_vec(out) };
        let entries = vec![
            e(1, 0, 1, 0, &[1, 0]),
            e(1, 0, 1, 1, &[-1, -1]),
            e(1, 1, 1, 1, &[0, 1]),
            e(1, 0, 2, 0, &[0]),
            e(1, 0, 2, 1, &[1]),
            e(1, 1, 2, 0, &[-1]),
            e(1, 1, 2, 1, &[0]),
        ];
        let ring = GradedRing::from_table(basis, entries, Some(int_vec(&[1]))).expect("flag table");
        let line = RingElement::homogeneous(&ring, 2, int_vec(&[-1, 1])).unwrap();
        let pt = RingElement::basis(&ring, 3, 0);
        TwistorChow::new("flag", ring, line, vec![BigInt::one(), BigInt::one()], pt)
            .expect("flag base")
    }

    /// Looks up a built-in base by name (`P3` or `flag`).
    pub fn builtin(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "p3" | "cp3" | "projective_space" => Some(Self::projective_space()),
            "flag" | "f12" | "flag_threefold" => Some(Self::flag_threefold()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn line_class(&self) -> &RingElement {
        &self.line_class
    }

    pub fn twistor_degrees(&self) -> &[BigInt] {
        &self.twistor_degrees
    }

    pub fn point_class(&self) -> &RingElement {
        &self.point_class
    }

    pub fn to_json(&self) -> TwistorChowJson {
        TwistorChowJson {
            name: Some(self.name.clone()),
            ring: self.ring.to_json(),
            line_class: to_json_ints(self.line_class.part(2)),
            twistor_degrees: to_json_ints(&self.twistor_degrees),
            point_class: to_json_ints(self.point_class.part(3)),
        }
    }

    pub fn from_json(json: &TwistorChowJson) -> Result<Self> {
        let ring = GradedRing::from_json(&json.ring)?;
        let line = RingElement::homogeneous(&ring, 2, from_json_ints(&json.line_class))?;
        let pt = RingElement::homogeneous(&ring, 3, from_json_ints(&json.point_class))?;
        TwistorChow::new(
            json.name.clone().unwrap_or_else(|| "custom".into()),
            ring,
            line,
            from_json_ints(&json.twistor_degrees),
            pt,
        )
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }
}

/// JSON form of a [`TwistorChow`]: the ring format plus three fields.
/// `line_class` and `point_class` are coefficient vectors in degrees 2 and 3.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TwistorChowJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub ring: RingJson,
    pub line_class: Vec<JsonInt>,
    pub twistor_degrees: Vec<JsonInt>,
    pub point_class: Vec<JsonInt>,
}

/// `CH•(Bl_ℓ Z)` with `f*`, `j*` and `j_*`.
#[derive(Clone, Debug)]
pub struct BlownUpChow {
    base: TwistorChow,
    ring: Arc<GradedRing>,
    pullback: GradedMap,
    restriction_to_q: GradedMap,
    pushforward_from_q: GradedMap,
}

fn pulled_label(l: &str) -> String {
    if l == "1" {
        l.to_string()
    } else {
        format!("f*{l}")
    }
}

/// Pads a base vector with a trailing zero (for `[Q]` or `E`).
fn embed(v: &[BigInt], extra: bool) -> IntVector {
    let mut out = v.to_vec();
    if extra {
        out.push(BigInt::zero());
    }
    out
}

/// Blows up `z` along its twistor line.
pub fn blow_up(z: &TwistorChow) -> Result<BlownUpChow> {
    let base = z.ring();
    let r1 = base.rank(1);
    let r2 = base.rank(2);
    let r3 = base.rank(3);
    let q_idx = r1;
    let e_idx = r2;

    let mut basis: Vec<Vec<String>> = base
        .basis_labels()
        .iter()
        .map(|ls| ls.iter().map(|l| pulled_label(l)).collect())
        .collect();
    basis[1].push(LABEL_Q.to_string());
    basis[2].push(LABEL_E.to_string());

    let has_extra = |d: usize| d == 1 || d == 2;
    let mut entries = Vec::new();
    // f*x · f*y = f*(xy)
    for d1 in 1..=3 {
        for d2 in d1..=3 - d1 {
            for i1 in 0..base.rank(d1) {
                for i2 in 0..base.rank(d2) {
                    let p = base.basis_product(d1, i1, d2, i2).expect("in range");
                    entries.push(MultEntry {
                        d1,
                        i1,
                        d2,
                        i2,
                        out: embed(p, has_extra(d1 + d2)),
                    });
                }
            }
        }
    }
    // [Q] · f*α = d_α E
    for (i, d) in z.twistor_degrees().iter().enumerate() {
        let mut out = vec![BigInt::zero(); r2 + 1];
        out[e_idx] = d.clone();
        entries.push(MultEntry { d1: 1, i1: i, d2: 1, i2: q_idx, out });
    }
    // [Q]² = −f*[ℓ] − 2E
    let mut q2: IntVector = embed(z.line_class().part(2), true).iter().map(|x| -x).collect();
    q2[e_idx] = BigInt::from(-2);
    entries.push(MultEntry { d1: 1, i1: q_idx, d2: 1, i2: q_idx, out: q2 });
    // [Q] · E = −f*pt
    entries.push(MultEntry {
        d1: 1,
        i1: q_idx,
        d2: 2,
        i2: e_idx,
        out: z.point_class().part(3).iter().map(|x| -x).collect(),
    });
    // f*α · E = 0 and f*β · [Q] = 0 are the zero defaults.

    let degree_functional = base.degree_functional().cloned();
    let ring = GradedRing::from_table(basis, entries, degree_functional)
        .map_err(|e| Error::InvalidBase(format!("blown-up table: {e}")))?;

    // f*: base -> blown-up
    let pull_mats = (0..=3)
        .map(|d| {
            let n = base.rank(d);
            let rows: Vec<IntVector> = (0..n)
                .map(|i| {
                    let mut e = vec![BigInt::zero(); n];
                    e[i] = BigInt::one();
                    e
                })
                .chain(has_extra(d).then(|| vec![BigInt::zero(); n]))
                .collect();
            IntMatrix::from_rows(n, &rows)
        })
        .collect::<Result<Vec<_>>>()?;
    let pullback = GradedMap::new(base.clone(), ring.clone(), 0, pull_mats, true)?;

    // j*: blown-up -> quadric
    let qr = quadric_ring();
    let mut j1 = IntMatrix::zeros(2, r1 + 1);
    for (i, d) in z.twistor_degrees().iter().enumerate() {
        j1.set(0, i, d.clone());
    }
    j1.set(0, q_idx, BigInt::from(-1));
    j1.set(1, q_idx, BigInt::from(-1));
    let mut j2 = IntMatrix::zeros(1, r2 + 1);
    j2.set(0, e_idx, BigInt::from(-1));
    let restriction_to_q = GradedMap::new(
        ring.clone(),
        qr.clone(),
        0,
        vec![IntMatrix::identity(1), j1, j2, IntMatrix::zeros(0, r3)],
        true,
    )?;

    // j_*: quadric -> blown-up, shift 1
    let mut p0 = IntMatrix::zeros(r1 + 1, 1);
    p0.set(q_idx, 0, BigInt::one());
    let mut p1 = IntMatrix::zeros(r2 + 1, 2);
    p1.set(e_idx, 0, BigInt::one());
    for (k, c) in z.line_class().part(2).iter().enumerate() {
        p1.set(k, 1, c.clone());
    }
    p1.set(e_idx, 1, BigInt::one());
    let mut p2 = IntMatrix::zeros(r3, 1);
    for (k, c) in z.point_class().part(3).iter().enumerate() {
        p2.set(k, 0, c.clone());
    }
    let pushforward_from_q = GradedMap::new(qr.clone(), ring.clone(), 1, vec![p0, p1, p2], false)?;

    Ok(BlownUpChow {
        base: z.clone(),
        ring,
        pullback,
        restriction_to_q,
        pushforward_from_q,
    })
}

impl BlownUpChow {
    pub fn base(&self) -> &TwistorChow {
        &self.base
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    /// `f*`.
    pub fn pullback_map(&self) -> &GradedMap {
        &self.pullback
    }

    /// `j*`.
    pub fn restriction_map(&self) -> &GradedMap {
        &self.restriction_to_q
    }

    /// `j_*`.
    pub fn pushforward_map(&self) -> &GradedMap {
        &self.pushforward_from_q
    }

    pub fn element(&self, label: &str) -> Result<RingElement> {
        RingElement::labelled(&self.ring, label)
    }

    pub fn one(&self) -> RingElement {
        RingElement::one(&self.ring)
    }

    /// `[Q]`.
    pub fn q_class(&self) -> RingElement {
        RingElement::basis(&self.ring, 1, self.ring.rank(1) - 1)
    }

    /// `E = j_*b`.
    pub fn exceptional_line(&self) -> RingElement {
        RingElement::basis(&self.ring, 2, self.ring.rank(2) - 1)
    }

    pub fn pullback(&self, x: &RingElement) -> Result<RingElement> {
        self.pullback.apply(x)
    }

    /// `f*[ℓ]`.
    pub fn pulled_line_class(&self) -> RingElement {
        self.pullback(self.base.line_class()).expect("base ring")
    }

    /// `f*pt`.
    pub fn point(&self) -> RingElement {
        self.pullback(self.base.point_class()).expect("base ring")
    }

    /// `j*x`.
    pub fn restrict_to_quadric(&self, x: &RingElement) -> Result<QuadricClass> {
        QuadricClass::new(self.restriction_to_q.apply(x)?)
    }

    /// `j_*γ`.
    pub fn push_from_quadric(&self, g: &QuadricClass) -> Result<RingElement> {
        self.pushforward_from_q.apply(g.element())
    }

    /// `[Q]²`.
    pub fn self_intersection(&self) -> RingElement {
        let q = self.q_class();
        q.mul(&q).expect("same ring")
    }

    /// Basis pairs `(x, γ)` violating `j_*(j*x · γ) = x · j_*γ`.
    pub fn projection_formula_defects(&self) -> Vec<String> {
        let qr = quadric_ring();
        let mut out = Vec::new();
        for dx in 0..=self.ring.top_degree() {
            for ix in 0..self.ring.rank(dx) {
                let x = RingElement::basis(&self.ring, dx, ix);
                let jx = self.restriction_to_q.apply(&x).unwrap();
                for dg in 0..=qr.top_degree() {
                    for ig in 0..qr.rank(dg) {
                        let g = RingElement::basis(qr, dg, ig);
                        let lhs = self.pushforward_from_q.apply(&jx.mul(&g).unwrap()).unwrap();
                        let rhs = x.mul(&self.pushforward_from_q.apply(&g).unwrap()).unwrap();
                        if lhs != rhs {
                            out.push(format!(
                                "j_*(j*{} · {}) = {} but {} · j_*{} = {}",
                                self.ring.label(dx, ix),
                                qr.label(dg, ig),
                                lhs,
                                self.ring.label(dx, ix),
                                qr.label(dg, ig),
                                rhs
                            ));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Lattice of compatible pairs `(α₁, α₂)` with `j₁*α₁ = σ*j₂*α₂`, as a
/// graded ring under the componentwise product.
#[derive(Clone, Debug)]
pub struct EqualizerRing {
    branch1: BlownUpChow,
    branch2: BlownUpChow,
    matching: Vec<IntMatrix>,
    lattices: Vec<Vec<IntVector>>,
    ring: Arc<GradedRing>,
}

/// Builds the equalizer of `j₁*` and `σ*∘j₂*`.
pub fn build_equalizer(b1: &BlownUpChow, b2: &BlownUpChow) -> Result<EqualizerRing> {
    let qr = quadric_ring();
    if !same_ring(b1.restriction_map().target(), qr) || !same_ring(b2.restriction_map().target(), qr) {
        return Err(Error::IncompatibleBranches(
            "both branches must restrict to the shared quadric ring".into(),
        ));
    }
    let top = b1.ring().top_degree();
    if b2.ring().top_degree() != top {
        return Err(Error::IncompatibleBranches(format!(
            "top degrees {} and {} differ",
            top,
            b2.ring().top_degree()
        )));
    }
    let sigma = sigma_map();
    let sigma_j2 = sigma.compose(b2.restriction_map())?;

    let mut matching = Vec::new();
    let mut lattices = Vec::new();
    for k in 0..=top {
        let a = b1.restriction_map().matrix(k);
        let c = sigma_j2.matrix(k);
        let neg_c = IntMatrix::from_rows(
            c.cols(),
            &c.row_vectors()
                .into_iter()
                .map(|r| r.into_iter().map(|x| -x).collect())
                .collect::<Vec<_>>(),
        )?;
        let m = a.hstack(&neg_c)?;
        let m = if m.rows() == 0 {
            IntMatrix::zeros(0, b1.ring().rank(k) + b2.ring().rank(k))
        } else {
            m
        };
        lattices.push(integer_kernel(&m));
        matching.push(m);
    }

    let r1 = |k: usize| b1.ring().rank(k);
    let split = |k: usize, v: &IntVector| -> (RingElement, RingElement) {
        let x1 = RingElement::homogeneous(b1.ring(), k, v[..r1(k)].to_vec()).unwrap();
        let x2 = RingElement::homogeneous(b2.ring(), k, v[r1(k)..].to_vec()).unwrap();
        (x1, x2)
    };

    let basis: Vec<Vec<String>> = lattices
        .iter()
        .enumerate()
        .map(|(k, l)| {
            if k == 0 {
                vec!["1".to_string()]
            } else {
                (0..l.len()).map(|i| format!("e{k}_{i}")).collect()
            }
        })
        .collect();
    if lattices[0].len() != 1 {
        return Err(Error::IncompatibleBranches("degree-0 equalizer is not rank 1".into()));
    }
    // Normalize the unit pair to (1, 1).
    if lattices[0][0].iter().any(|x| x < &BigInt::zero()) {
        lattices[0][0] = lattices[0][0].iter().map(|x| -x).collect();
    }

    let mut entries = Vec::new();
    for k1 in 1..=top {
        for k2 in k1..=top - k1 {
            for (i1, v1) in lattices[k1].iter().enumerate() {
                for (i2, v2) in lattices[k2].iter().enumerate() {
                    let (a1, a2) = split(k1, v1);
                    let (c1, c2) = split(k2, v2);
                    let mut prod = a1.mul(&c1)?.part(k1 + k2).to_vec();
                    prod.extend_from_slice(a2.mul(&c2)?.part(k1 + k2));
                    let coords = lattice_coordinates(&lattices[k1 + k2], &prod)?.ok_or_else(|| {
                        Error::IncompatibleBranches(format!(
                            "product of equalizer generators e{k1}_{i1}, e{k2}_{i2} leaves the lattice"
                        ))
                    })?;
                    entries.push(MultEntry { d1: k1, i1, d2: k2, i2, out: coords });
                }
            }
        }
    }
    let ring = GradedRing::from_table(basis, entries, None)?;

    Ok(EqualizerRing {
        branch1: b1.clone(),
        branch2: b2.clone(),
        matching,
        lattices,
        ring,
    })
}

/// Common degree of a pair, treating zero as compatible with any degree.
pub fn pair_degree(a1: &RingElement, a2: &RingElement) -> Result<usize> {
    let deg = |x: &RingElement| -> Result<Option<usize>> {
        if x.is_zero() {
            return Ok(None);
        }
        x.homogeneous_degree().map(Some).ok_or_else(|| Error::WrongDegree {
            expected: 0,
            found: "mixed".into(),
        })
    };
    match (deg(a1)?, deg(a2)?) {
        (None, None) => Ok(0),
        (Some(d), None) | (None, Some(d)) => Ok(d),
        (Some(d1), Some(d2)) if d1 == d2 => Ok(d1),
        (Some(d1), Some(d2)) => Err(Error::CodimensionMismatch(d1, d2)),
    }
}

impl EqualizerRing {
    pub fn branch1(&self) -> &BlownUpChow {
        &self.branch1
    }

    pub fn branch2(&self) -> &BlownUpChow {
        &self.branch2
    }

    /// The equalizer as an abstract graded ring in its lattice basis.
    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.lattices.iter().map(Vec::len).collect()
    }

    /// Basis of degree `k` as concatenated coefficient vectors `(α₁ | α₂)`.
    pub fn lattice(&self, k: usize) -> &[IntVector] {
        &self.lattices[k]
    }

    /// The matrix of `(α₁, α₂) ↦ j₁*α₁ − σ*j₂*α₂` in degree `k`.
    pub fn matching_matrix(&self, k: usize) -> &IntMatrix {
        &self.matching[k]
    }

    pub fn basis_pair(&self, k: usize, i: usize) -> (RingElement, RingElement) {
        let v = &self.lattices[k][i];
        let r1 = self.branch1.ring().rank(k);
        (
            RingElement::homogeneous(self.branch1.ring(), k, v[..r1].to_vec()).unwrap(),
            RingElement::homogeneous(self.branch2.ring(), k, v[r1..].to_vec()).unwrap(),
        )
    }

    fn check_rings(&self, a1: &RingElement, a2: &RingElement) -> Result<()> {
        if same_ring(a1.ring(), self.branch1.ring()) && same_ring(a2.ring(), self.branch2.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `j₁*α₁ − σ*j₂*α₂`.
    pub fn matching_defect(&self, a1: &RingElement, a2: &RingElement) -> Result<QuadricClass> {
        self.check_rings(a1, a2)?;
        pair_degree(a1, a2)?;
        let r1 = self.branch1.restrict_to_quadric(a1)?;
        let r2 = sigma_pullback(&self.branch2.restrict_to_quadric(a2)?);
        Ok(r1.sub(&r2))
    }

    /// Coordinates of a pair in the lattice basis of its degree.
    pub fn coordinates(&self, a1: &RingElement, a2: &RingElement) -> Result<Option<(usize, IntVector)>> {
        self.check_rings(a1, a2)?;
        let k = pair_degree(a1, a2)?;
        let mut v = a1.part(k).to_vec();
        v.extend_from_slice(a2.part(k));
        Ok(lattice_coordinates(&self.lattices[k], &v)?.map(|c| (k, c)))
    }

    /// Basis pairs whose componentwise product leaves the lattice or fails
    /// the matching condition; empty by construction, re-verified here.
    pub fn closure_defects(&self) -> Vec<String> {
        let top = self.lattices.len() - 1;
        let mut out = Vec::new();
        for k1 in 0..=top {
            for k2 in 0..=top - k1 {
                for i1 in 0..self.lattices[k1].len() {
                    for i2 in 0..self.lattices[k2].len() {
                        let (a1, a2) = self.basis_pair(k1, i1);
                        let (c1, c2) = self.basis_pair(k2, i2);
                        let p1 = a1.mul(&c1).unwrap();
                        let p2 = a2.mul(&c2).unwrap();
                        let defect = self.matching_defect(&p1, &p2).map(|d| d.is_zero());
                        let member = self.coordinates(&p1, &p2).map(|c| c.is_some());
                        if !matches!((defect, member), (Ok(true), Ok(true))) {
                            out.push(format!("e{k1}_{i1} · e{k2}_{i2} is not a compatible pair"));
                        }
                    }
                }
            }
        }
        out
    }
}

/// True iff the pair satisfies the matching condition.
pub fn equalizer_membership(e: &EqualizerRing, a1: &RingElement, a2: &RingElement) -> Result<bool> {
    let by_lattice = e.coordinates(a1, a2)?.is_some();
    debug_assert_eq!(by_lattice, e.matching_defect(a1, a2)?.is_zero());
    Ok(by_lattice)
}

/// Degree of a top-degree class under the base degree functional.
pub fn cycle_degree(b: &BlownUpChow, x: &RingElement) -> Result<BigInt> {
    let f = b.ring().degree_functional().ok_or_else(|| Error::InvalidBase("no degree functional".into()))?;
    Ok(dot(f, x.part(b.ring().top_degree())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> BlownUpChow {
        blow_up(&TwistorChow::projective_space()).unwrap()
    }

    #[test]
    fn p3_ranks_and_products() {
        let b = p3();
        assert_eq!(b.ring().ranks(), vec![1, 2, 2, 1]);
        let h = b.element("f*h").unwrap();
        assert_eq!(b.q_class().mul(&h).unwrap(), b.exceptional_line());
        assert_eq!(b.q_class().mul(&b.exceptional_line()).unwrap(), b.point().neg());
        assert_eq!(b.q_class().pow(3).degree_of_cycle().unwrap(), BigInt::from(2));
    }

    #[test]
    fn restriction_values() {
        let b = p3();
        assert_eq!(b.restrict_to_quadric(&b.q_class()).unwrap(), QuadricClass::xi().neg());
        assert_eq!(b.restrict_to_quadric(&b.element("f*h").unwrap()).unwrap(), QuadricClass::b());
        assert_eq!(
            b.restrict_to_quadric(&b.exceptional_line()).unwrap(),
            QuadricClass::point().neg()
        );
        assert!(b.restrict_to_quadric(&b.point()).unwrap().is_zero());
    }

    #[test]
    fn projection_formula() {
        assert!(p3().projection_formula_defects().is_empty());
        let f = blow_up(&TwistorChow::flag_threefold()).unwrap();
        assert!(f.projection_formula_defects().is_empty());
    }

    #[test]
    fn bad_twistor_degree_is_rejected() {
        let z = TwistorChow::projective_space();
        let err = TwistorChow::new(
            "bad",
            z.ring().clone(),
            z.line_class().clone(),
            vec![BigInt::from(2)],
            z.point_class().clone(),
        );
        assert!(matches!(err, Err(Error::InvalidBase(_))));
    }

    #[test]
    fn equalizer_ranks() {
        let b = p3();
        let e = build_equalizer(&b, &b).unwrap();
        assert_eq!(e.ranks(), vec![1, 2, 3, 2]);
        let f = blow_up(&TwistorChow::flag_threefold()).unwrap();
        let e = build_equalizer(&f, &f).unwrap();
        assert_eq!(e.ranks(), vec![1, 4, 5, 2]);
        assert!(e.closure_defects().is_empty());
    }

    #[test]
    fn membership_examples() {
        let b = p3();
        let e = build_equalizer(&b, &b).unwrap();
        let h = b.element("f*h").unwrap();
        let zero = RingElement::zero(b.ring());
        assert!(equalizer_membership(&e, &b.q_class(), &b.q_class()).unwrap());
        assert!(equalizer_membership(&e, &zero, &zero).unwrap());
        assert!(!equalizer_membership(&e, &h, &zero).unwrap());
        assert!(!equalizer_membership(&e, &h, &h).unwrap());
        let partner = h.add(&b.q_class()).unwrap().neg();
        assert!(equalizer_membership(&e, &h, &partner).unwrap());
        assert!(matches!(
            equalizer_membership(&e, &h, &b.point()),
            Err(Error::CodimensionMismatch(1, 3))
        ));
    }

    #[test]
    fn twistor_json_round_trip() {
        let z = TwistorChow::flag_threefold();
        let s = serde_json::to_string(&z.to_json()).unwrap();
        let back = TwistorChow::from_json_str(&s).unwrap();
        assert_eq!(back.line_class(), z.line_class());
        assert_eq!(**back.ring(), **z.ring());
    }
}
