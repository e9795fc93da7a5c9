//! Graded commutative rings over ℤ presented by finite multiplication tables.
//!
//! A [`GradedRing`] fixes per-degree bases (with labels) and the product of
//! every pair of basis elements. Construction validates the unit law,
//! commutativity and associativity on all basis triples, so a ring value in
//! hand always satisfies them. [`RingElement`] and [`GradedMap`] carry an
//! `Arc` to their ring(s); operations on values from different rings fail
//! with [`Error::RingMismatch`].

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{from_json_ints, to_json_ints, JsonInt};
use crate::lattice::{IntMatrix, IntVector};

/// One product of basis elements: `e(d1,i1) * e(d2,i2) = out` in degree
/// `d1 + d2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultEntry {
    pub d1: usize,
    pub i1: usize,
    pub d2: usize,
    pub i2: usize,
    pub out: IntVector,
}

#[derive(Debug, PartialEq, Eq)]
pub struct GradedRing {
    basis: Vec<Vec<String>>,
    /// `products[d1][d2][i1 * rank(d2) + i2]`, only for `d1 + d2 <= top`.
    products: Vec<Vec<Vec<IntVector>>>,
    degree_functional: Option<IntVector>,
}

fn zero_vec(n: usize) -> IntVector {
    vec![BigInt::zero(); n]
}

fn unit_vec(n: usize, i: usize) -> IntVector {
    let mut v = zero_vec(n);
    v[i] = BigInt::one();
    v
}

impl GradedRing {
    /// Builds and validates a ring from labels and a (partial) product table.
    ///
    /// Missing products with the unit are filled in, a product given in one
    /// order is mirrored to the other, and anything else that is absent is
    /// zero.
    pub fn from_table(
        basis: Vec<Vec<String>>,
        entries: impl IntoIterator<Item = MultEntry>,
        degree_functional: Option<IntVector>,
    ) -> Result<Arc<GradedRing>> {
        if basis.is_empty() {
            return Err(Error::InvalidRing("no degrees".into()));
        }
        if basis[0].len() != 1 {
            return Err(Error::InvalidRing(format!(
                "degree 0 must have rank 1, found {}",
                basis[0].len()
            )));
        }
        let mut seen = HashMap::new();
        for (d, labels) in basis.iter().enumerate() {
            for l in labels {
                if seen.insert(l.clone(), d).is_some() {
                    return Err(Error::InvalidRing(format!("duplicate basis label {l:?}")));
                }
            }
        }
        let top = basis.len() - 1;
        let rank = |d: usize| basis[d].len();

        let mut slots: Vec<Vec<Vec<Option<IntVector>>>> = (0..=top)
            .map(|d1| {
                (0..=top)
                    .map(|d2| {
                        if d1 + d2 <= top {
                            vec![None; rank(d1) * rank(d2)]
                        } else {
                            Vec::new()
                        }
                    })
                    .collect()
            })
            .collect();

        let put = |slots: &mut Vec<Vec<Vec<Option<IntVector>>>>,
                       d1: usize,
                       i1: usize,
                       d2: usize,
                       i2: usize,
                       out: &IntVector|
         -> Result<()> {
            let idx = i1 * rank(d2) + i2;
            match &slots[d1][d2][idx] {
                Some(prev) if prev != out => Err(Error::InvalidRing(format!(
                    "conflicting products for {} * {}",
                    basis[d1][i1], basis[d2][i2]
                ))),
                _ => {
                    slots[d1][d2][idx] = Some(out.clone());
                    Ok(())
                }
            }
        };

        for e in entries {
            if e.d1 > top || e.d2 > top {
                return Err(Error::DegreeOutOfRange {
                    degree: e.d1.max(e.d2),
                    top,
                });
            }
            if e.i1 >= rank(e.d1) || e.i2 >= rank(e.d2) {
                return Err(Error::InvalidRing(format!(
                    "basis index out of range in product ({},{})*({},{})",
                    e.d1, e.i1, e.d2, e.i2
                )));
            }
            if e.d1 + e.d2 > top {
                if e.out.iter().any(|x| !x.is_zero()) {
                    return Err(Error::InvalidRing(format!(
                        "product {} * {} lands above the top degree but is nonzero",
                        basis[e.d1][e.i1], basis[e.d2][e.i2]
                    )));
                }
                continue;
            }
            let n = rank(e.d1 + e.d2);
            if e.out.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: e.out.len(),
                });
            }
            put(&mut slots, e.d1, e.i1, e.d2, e.i2, &e.out)?;
            if (e.d1, e.i1) != (e.d2, e.i2) {
                // Mirror; a conflicting explicit entry means non-commutativity.
                let idx = e.i2 * rank(e.d1) + e.i1;
                match &slots[e.d2][e.d1][idx] {
                    Some(prev) if prev != &e.out => {
                        return Err(Error::InvalidRing(format!(
                            "table is not commutative at {} * {}",
                            basis[e.d1][e.i1], basis[e.d2][e.i2]
                        )))
                    }
                    _ => slots[e.d2][e.d1][idx] = Some(e.out.clone()),
                }
            }
        }

        // Unit law.
        for d in 0..=top {
            for i in 0..rank(d) {
                let expect = unit_vec(rank(d), i);
                for (a, b, idx) in [(0, d, i), (d, 0, i)] {
                    match &slots[a][b][idx] {
                        Some(v) if v != &expect => {
                            return Err(Error::InvalidRing(format!(
                                "unit does not act as the identity on {}",
                                basis[d][i]
                            )))
                        }
                        _ => slots[a][b][idx] = Some(expect.clone()),
                    }
                }
            }
        }

        let products = slots
            .into_iter()
            .enumerate()
            .map(|(d1, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(d2, cell)| {
                        let n = if d1 + d2 <= top { rank(d1 + d2) } else { 0 };
                        cell.into_iter()
                            .map(|o| o.unwrap_or_else(|| zero_vec(n)))
                            .collect()
                    })
                    .collect()
            })
            .collect();

        if let Some(f) = &degree_functional {
            if f.len() != rank(top) {
                return Err(Error::DimensionMismatch {
                    expected: rank(top),
                    found: f.len(),
                });
            }
        }

        let ring = GradedRing {
            basis,
            products,
            degree_functional,
        };
        if let Some(msg) = ring.commutativity_defects().into_iter().next() {
            return Err(Error::InvalidRing(msg));
        }
        if let Some(msg) = ring.associativity_defects().into_iter().next() {
            return Err(Error::InvalidRing(msg));
        }
        Ok(Arc::new(ring))
    }

    pub fn top_degree(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn rank(&self, degree: usize) -> usize {
        self.basis.get(degree).map_or(0, Vec::len)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn total_rank(&self) -> usize {
        self.basis.iter().map(Vec::len).sum()
    }

    pub fn labels(&self, degree: usize) -> &[String] {
        &self.basis[degree]
    }

    pub fn basis_labels(&self) -> &[Vec<String>] {
        &self.basis
    }

    pub fn label(&self, degree: usize, index: usize) -> &str {
        &self.basis[degree][index]
    }

    pub fn find_label(&self, label: &str) -> Option<(usize, usize)> {
        self.basis.iter().enumerate().find_map(|(d, ls)| {
            ls.iter().position(|l| l == label).map(|i| (d, i))
        })
    }

    pub fn degree_functional(&self) -> Option<&IntVector> {
        self.degree_functional.as_ref()
    }

    /// Product of two basis elements; `None` when it lands above the top
    /// degree (and is therefore zero).
    pub fn basis_product(&self, d1: usize, i1: usize, d2: usize, i2: usize) -> Option<&IntVector> {
        if d1 + d2 > self.top_degree() {
            return None;
        }
        Some(&self.products[d1][d2][i1 * self.rank(d2) + i2])
    }

    fn basis_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..=self.top_degree()).flat_map(move |d| (0..self.rank(d)).map(move |i| (d, i)))
    }

    /// Basis pairs whose products differ in the two orders.
    pub fn commutativity_defects(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (d1, i1) in self.basis_pairs() {
            for (d2, i2) in self.basis_pairs() {
                if let (Some(a), Some(b)) = (
                    self.basis_product(d1, i1, d2, i2),
                    self.basis_product(d2, i2, d1, i1),
                ) {
                    if a != b {
                        out.push(format!(
                            "{} * {} != {} * {}",
                            self.basis[d1][i1], self.basis[d2][i2], self.basis[d2][i2], self.basis[d1][i1]
                        ));
                    }
                }
            }
        }
        out
    }

    /// Basis triples on which `(xy)z != x(yz)`.
    pub fn associativity_defects(&self) -> Vec<String> {
        let top = self.top_degree();
        let mut out = Vec::new();
        for (d1, i1) in self.basis_pairs() {
            for (d2, i2) in self.basis_pairs() {
                for (d3, i3) in self.basis_pairs() {
                    if d1 + d2 + d3 > top {
                        continue;
                    }
                    let xy = self.basis_product(d1, i1, d2, i2).unwrap();
                    let yz = self.basis_product(d2, i2, d3, i3).unwrap();
                    let left = self.vec_times_basis(d1 + d2, xy, d3, i3);
                    let right = self.basis_times_vec(d1, i1, d2 + d3, yz);
                    if left != right {
                        out.push(format!(
                            "({} * {}) * {} != {} * ({} * {})",
                            self.basis[d1][i1],
                            self.basis[d2][i2],
                            self.basis[d3][i3],
                            self.basis[d1][i1],
                            self.basis[d2][i2],
                            self.basis[d3][i3]
                        ));
                    }
                }
            }
        }
        out
    }

    fn vec_times_basis(&self, d: usize, v: &[BigInt], d2: usize, i2: usize) -> IntVector {
        let mut acc = zero_vec(self.rank(d + d2));
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(self.basis_product(d, i, d2, i2).unwrap()) {
                *a += c * p;
            }
        }
        acc
    }

    fn basis_times_vec(&self, d1: usize, i1: usize, d: usize, v: &[BigInt]) -> IntVector {
        let mut acc = zero_vec(self.rank(d1 + d));
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(self.basis_product(d1, i1, d, i).unwrap()) {
                *a += c * p;
            }
        }
        acc
    }

    pub fn to_json(&self) -> RingJson {
        let mut mult = Vec::new();
        for (d1, i1) in self.basis_pairs() {
            if d1 == 0 {
                continue;
            }
            for (d2, i2) in self.basis_pairs() {
                if (d2, i2) < (d1, i1) || d1 + d2 > self.top_degree() {
                    continue;
                }
                let out = self.basis_product(d1, i1, d2, i2).unwrap();
                if out.iter().all(Zero::is_zero) {
                    continue;
                }
                mult.push(MultEntryJson {
                    d1,
                    i1,
                    d2,
                    i2,
                    out: to_json_ints(out),
                });
            }
        }
        RingJson {
            top_degree: self.top_degree(),
            basis: self.basis.clone(),
            mult,
            degree_functional: self.degree_functional.as_deref().map(to_json_ints),
        }
    }

    pub fn from_json(json: &RingJson) -> Result<Arc<GradedRing>> {
        if json.basis.len() != json.top_degree + 1 {
            return Err(Error::InvalidRing(format!(
                "top_degree {} but {} basis degrees",
                json.top_degree,
                json.basis.len()
            )));
        }
        GradedRing::from_table(
            json.basis.clone(),
            json.mult.iter().map(|m| MultEntry {
                d1: m.d1,
                i1: m.i1,
                d2: m.d2,
                i2: m.i2,
                out: from_json_ints(&m.out),
            }),
            json.degree_functional.as_deref().map(from_json_ints),
        )
    }

    pub fn from_json_str(s: &str) -> Result<Arc<GradedRing>> {
        GradedRing::from_json(&serde_json::from_str(s)?)
    }
}

pub fn same_ring(a: &Arc<GradedRing>, b: &Arc<GradedRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// JSON interchange form of a [`GradedRing`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RingJson {
    pub top_degree: usize,
    pub basis: Vec<Vec<String>>,
    #[serde(default)]
    pub mult: Vec<MultEntryJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_functional: Option<Vec<JsonInt>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MultEntryJson {
    pub d1: usize,
    pub i1: usize,
    pub d2: usize,
    pub i2: usize,
    pub out: Vec<JsonInt>,
}

/// An element of a [`GradedRing`], stored as per-degree coefficient vectors.
#[derive(Clone, Debug)]
pub struct RingElement {
    ring: Arc<GradedRing>,
    coeffs: Vec<IntVector>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.coeffs == other.coeffs
    }
}

impl Eq for RingElement {}

impl RingElement {
    pub fn zero(ring: &Arc<GradedRing>) -> Self {
        RingElement {
            coeffs: ring.ranks().into_iter().map(zero_vec).collect(),
            ring: ring.clone(),
        }
    }

    pub fn one(ring: &Arc<GradedRing>) -> Self {
        Self::basis(ring, 0, 0)
    }

    pub fn basis(ring: &Arc<GradedRing>, degree: usize, index: usize) -> Self {
        let mut x = Self::zero(ring);
        x.coeffs[degree][index] = BigInt::one();
        x
    }

    pub fn homogeneous(ring: &Arc<GradedRing>, degree: usize, v: IntVector) -> Result<Self> {
        if degree > ring.top_degree() {
            return Err(Error::DegreeOutOfRange {
                degree,
                top: ring.top_degree(),
            });
        }
        if v.len() != ring.rank(degree) {
            return Err(Error::DimensionMismatch {
                expected: ring.rank(degree),
                found: v.len(),
            });
        }
        let mut x = Self::zero(ring);
        x.coeffs[degree] = v;
        Ok(x)
    }

    pub fn from_coeffs(ring: &Arc<GradedRing>, coeffs: Vec<IntVector>) -> Result<Self> {
        if coeffs.len() != ring.top_degree() + 1 {
            return Err(Error::DimensionMismatch {
                expected: ring.top_degree() + 1,
                found: coeffs.len(),
            });
        }
        for (d, v) in coeffs.iter().enumerate() {
            if v.len() != ring.rank(d) {
                return Err(Error::DimensionMismatch {
                    expected: ring.rank(d),
                    found: v.len(),
                });
            }
        }
        Ok(RingElement {
            ring: ring.clone(),
            coeffs,
        })
    }

    /// Linear combination of labelled basis elements.
    pub fn from_labels<S: AsRef<str>>(
        ring: &Arc<GradedRing>,
        terms: &[(S, BigInt)],
    ) -> Result<Self> {
        let mut x = Self::zero(ring);
        for (label, c) in terms {
            let (d, i) = ring
                .find_label(label.as_ref())
                .ok_or_else(|| Error::UnknownLabel(label.as_ref().to_string()))?;
            x.coeffs[d][i] += c;
        }
        Ok(x)
    }

    pub fn labelled(ring: &Arc<GradedRing>, label: &str) -> Result<Self> {
        Self::from_labels(ring, &[(label, BigInt::one())])
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[IntVector] {
        &self.coeffs
    }

    pub fn part(&self, degree: usize) -> &[BigInt] {
        &self.coeffs[degree]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    /// Degree of a nonzero homogeneous element.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut found = None;
        for (d, v) in self.coeffs.iter().enumerate() {
            if v.iter().any(|x| !x.is_zero()) {
                if found.is_some() {
                    return None;
                }
                found = Some(d);
            }
        }
        found
    }

    /// True for zero and for elements concentrated in `degree`.
    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(d, v)| d == degree || v.iter().all(Zero::is_zero))
    }

    /// Errors unless the element is zero or homogeneous of `degree`.
    pub fn expect_degree(&self, degree: usize) -> Result<()> {
        if self.is_homogeneous_of(degree) {
            Ok(())
        } else {
            Err(Error::WrongDegree {
                expected: degree,
                found: self.degree_description(),
            })
        }
    }

    fn degree_description(&self) -> String {
        match self.homogeneous_degree() {
            Some(d) => d.to_string(),
            None => "mixed".into(),
        }
    }

    pub fn component(&self, degree: usize) -> RingElement {
        let mut x = Self::zero(&self.ring);
        x.coeffs[degree] = self.coeffs[degree].clone();
        x
    }

    fn check_same(&self, other: &RingElement) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(RingElement {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RingElement {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|v| v.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same(other)?;
        let ring = &self.ring;
        let top = ring.top_degree();
        let mut out = Self::zero(ring);
        for (d1, v1) in self.coeffs.iter().enumerate() {
            for (d2, v2) in other.coeffs.iter().enumerate() {
                if d1 + d2 > top {
                    continue;
                }
                for (i1, c1) in v1.iter().enumerate() {
                    if c1.is_zero() {
                        continue;
                    }
                    for (i2, c2) in v2.iter().enumerate() {
                        if c2.is_zero() {
                            continue;
                        }
                        let c = c1 * c2;
                        let p = ring.basis_product(d1, i1, d2, i2).unwrap();
                        for (acc, x) in out.coeffs[d1 + d2].iter_mut().zip(p) {
                            *acc += &c * x;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> RingElement {
        let mut acc = Self::one(&self.ring);
        for _ in 0..exp {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Degree of the top-degree component under the ring's degree functional.
    pub fn degree_of_cycle(&self) -> Result<BigInt> {
        let f = self.ring.degree_functional().ok_or_else(|| {
            Error::InvalidRing("ring has no degree functional".into())
        })?;
        Ok(crate::lattice::dot(f, &self.coeffs[self.ring.top_degree()]))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, v) in self.coeffs.iter().enumerate() {
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let label = self.ring.label(d, i);
                let mag = c.abs();
                let sign = if c.is_negative() { "-" } else { "+" };
                if first {
                    if c.is_negative() {
                        f.write_str("-")?;
                    }
                } else {
                    write!(f, " {sign} ")?;
                }
                if mag.is_one() {
                    write!(f, "{label}")?;
                } else {
                    write!(f, "{mag}·{label}")?;
                }
                first = false;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A degree-shifting ℤ-linear map between graded rings, one matrix per
/// source degree.
#[derive(Clone, Debug)]
pub struct GradedMap {
    source: Arc<GradedRing>,
    target: Arc<GradedRing>,
    shift: isize,
    matrices: Vec<IntMatrix>,
    is_ring_hom: bool,
}

impl GradedMap {
    /// Matrix `d` maps source degree `d` into target degree `d + shift`;
    /// when that degree does not exist the matrix must have zero rows.
    /// Maps flagged as ring homomorphisms are checked on all basis pairs.
    pub fn new(
        source: Arc<GradedRing>,
        target: Arc<GradedRing>,
        shift: isize,
        matrices: Vec<IntMatrix>,
        is_ring_hom: bool,
    ) -> Result<GradedMap> {
        if matrices.len() != source.top_degree() + 1 {
            return Err(Error::InvalidMap(format!(
                "expected {} matrices, found {}",
                source.top_degree() + 1,
                matrices.len()
            )));
        }
        for (d, m) in matrices.iter().enumerate() {
            let rows = target_degree(d, shift, &target).map_or(0, |t| target.rank(t));
            if m.rows() != rows || m.cols() != source.rank(d) {
                return Err(Error::InvalidMap(format!(
                    "degree {d}: expected a {}x{} matrix, found {}x{}",
                    rows,
                    source.rank(d),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if is_ring_hom && shift != 0 {
            return Err(Error::NotHomomorphism("a ring homomorphism has shift 0".into()));
        }
        let map = GradedMap {
            source,
            target,
            shift,
            matrices,
            is_ring_hom,
        };
        if is_ring_hom {
            if let Some(msg) = map.homomorphism_defects().into_iter().next() {
                return Err(Error::NotHomomorphism(msg));
            }
        }
        Ok(map)
    }

    pub fn identity(ring: &Arc<GradedRing>) -> GradedMap {
        let matrices = ring.ranks().into_iter().map(IntMatrix::identity).collect();
        GradedMap::new(ring.clone(), ring.clone(), 0, matrices, true).expect("identity map")
    }

    pub fn zero(source: &Arc<GradedRing>, target: &Arc<GradedRing>, shift: isize) -> GradedMap {
        let matrices = (0..=source.top_degree())
            .map(|d| {
                let rows = target_degree(d, shift, target).map_or(0, |t| target.rank(t));
                IntMatrix::zeros(rows, source.rank(d))
            })
            .collect();
        GradedMap::new(source.clone(), target.clone(), shift, matrices, false).expect("zero map")
    }

    pub fn source(&self) -> &Arc<GradedRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedRing> {
        &self.target
    }

    pub fn shift(&self) -> isize {
        self.shift
    }

    pub fn is_ring_hom(&self) -> bool {
        self.is_ring_hom
    }

    pub fn matrix(&self, degree: usize) -> &IntMatrix {
        &self.matrices[degree]
    }

    pub fn target_degree(&self, degree: usize) -> Option<usize> {
        target_degree(degree, self.shift, &self.target)
    }

    pub fn apply(&self, x: &RingElement) -> Result<RingElement> {
        if !same_ring(&self.source, x.ring()) {
            return Err(Error::RingMismatch);
        }
        let mut out = RingElement::zero(&self.target);
        for (d, v) in x.coeffs().iter().enumerate() {
            if let Some(t) = self.target_degree(d) {
                let image = self.matrices[d].mul_vec(v)?;
                for (acc, y) in out.coeffs[t].iter_mut().zip(image) {
                    *acc += y;
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GradedMap) -> Result<GradedMap> {
        if !same_ring(inner.target(), &self.source) {
            return Err(Error::RingMismatch);
        }
        let shift = self.shift + inner.shift;
        let matrices = (0..=inner.source.top_degree())
            .map(|d| match inner.target_degree(d) {
                Some(mid) if self.target_degree(mid).is_some() => {
                    self.matrices[mid].mul(&inner.matrices[d])
                }
                _ => {
                    let rows = target_degree(d, shift, &self.target).map_or(0, |t| self.target.rank(t));
                    Ok(IntMatrix::zeros(rows, inner.source.rank(d)))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        GradedMap::new(
            inner.source.clone(),
            self.target.clone(),
            shift,
            matrices,
            self.is_ring_hom && inner.is_ring_hom,
        )
    }

    /// Basis pairs on which `f(xy) != f(x)f(y)`, plus a failure of `f(1) = 1`.
    pub fn homomorphism_defects(&self) -> Vec<String> {
        let src = &self.source;
        let mut out = Vec::new();
        let one = RingElement::one(src);
        match self.apply(&one) {
            Ok(img) if img == RingElement::one(&self.target) => {}
            _ => out.push("f(1) != 1".to_string()),
        }
        for d1 in 0..=src.top_degree() {
            for i1 in 0..src.rank(d1) {
                for d2 in 0..=src.top_degree() {
                    for i2 in 0..src.rank(d2) {
                        let x = RingElement::basis(src, d1, i1);
                        let y = RingElement::basis(src, d2, i2);
                        let lhs = self.apply(&x.mul(&y).unwrap()).unwrap();
                        let rhs = self
                            .apply(&x)
                            .unwrap()
                            .mul(&self.apply(&y).unwrap())
                            .unwrap();
                        if lhs != rhs {
                            out.push(format!(
                                "f({} * {}) = {} but f({}) * f({}) = {}",
                                src.label(d1, i1),
                                src.label(d2, i2),
                                lhs,
                                src.label(d1, i1),
                                src.label(d2, i2),
                                rhs
                            ));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> MapJson {
        MapJson {
            shift: self.shift,
            matrices: self
                .matrices
                .iter()
                .map(|m| m.row_vectors().iter().map(|r| to_json_ints(r)).collect())
                .collect(),
            is_ring_hom: self.is_ring_hom,
        }
    }

    pub fn from_json(
        source: Arc<GradedRing>,
        target: Arc<GradedRing>,
        json: &MapJson,
    ) -> Result<GradedMap> {
        let matrices = json
            .matrices
            .iter()
            .enumerate()
            .map(|(d, rows)| {
                let rows: Vec<IntVector> = rows.iter().map(|r| from_json_ints(r)).collect();
                IntMatrix::from_rows(source.rank(d), &rows)
            })
            .collect::<Result<Vec<_>>>()?;
        GradedMap::new(source, target, json.shift, matrices, json.is_ring_hom)
    }
}

fn target_degree(d: usize, shift: isize, target: &GradedRing) -> Option<usize> {
    let t = d as isize + shift;
    (t >= 0 && t as usize <= target.top_degree()).then_some(t as usize)
}

/// JSON form of a [`GradedMap`]; source and target rings are supplied
/// separately. `matrices[d]` is a list of rows.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MapJson {
    #[serde(default)]
    pub shift: isize,
    pub matrices: Vec<Vec<Vec<JsonInt>>>,
    #[serde(default)]
    pub is_ring_hom: bool,
}

/// Saturated integer kernel of `f` restricted to source degree `degree`.
pub fn kernel_lattice(f: &GradedMap, degree: usize) -> Result<Vec<IntVector>> {
    if degree > f.source().top_degree() {
        return Err(Error::DegreeOutOfRange {
            degree,
            top: f.source().top_degree(),
        });
    }
    Ok(crate::lattice::integer_kernel(f.matrix(degree)))
}
