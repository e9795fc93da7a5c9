//! Exact integer linear algebra.
//!
//! Everything here is built on one primitive: the row Hermite normal form
//! together with the unimodular transform that produces it. Kernels,
//! lattice membership and lattice coordinates are all read off from it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type IntVector = Vec<BigInt>;

/// Dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[IntVector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<IntVector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(cols, &rows).expect("ragged matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<IntVector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> IntVector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<IntVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| dot(self.row(r), v))
            .collect())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Stacks `other` to the right of `self`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// row[target] -= factor * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let delta = self.get(source, c) * factor;
            self.data[target * self.cols + c] -= delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Row Hermite normal form `H = U * A` with `U` unimodular.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// `pivots[k]` is the column of the pivot in row `k`; rows past
    /// `pivots.len()` are zero.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Computes the row Hermite normal form of `a`.
///
/// Pivots are positive and entries above each pivot are reduced into
/// `[0, pivot)`.
pub fn hermite_normal_form(a: &IntMatrix) -> HermiteForm {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut pivots = Vec::new();
    let mut pr = 0;

    for pc in 0..h.cols() {
        if pr == h.rows() {
            break;
        }
        // Euclid on the column: keep moving the smallest nonzero entry up
        // and reducing everything below it until only one survives.
        loop {
            let best = (pr..h.rows())
                .filter(|&r| !h.get(r, pc).is_zero())
                .min_by(|&x, &y| h.get(x, pc).abs().cmp(&h.get(y, pc).abs()));
            let Some(best) = best else { break };
            h.swap_rows(pr, best);
            u.swap_rows(pr, best);
            let mut done = true;
            for r in pr + 1..h.rows() {
                if h.get(r, pc).is_zero() {
                    continue;
                }
                let q = h.get(r, pc).div_floor(h.get(pr, pc));
                h.sub_row_multiple(r, pr, &q);
                u.sub_row_multiple(r, pr, &q);
                if !h.get(r, pc).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(pr, pc).is_zero() {
            continue;
        }
        if h.get(pr, pc).is_negative() {
            h.negate_row(pr);
            u.negate_row(pr);
        }
        for r in 0..pr {
            let q = h.get(r, pc).div_floor(h.get(pr, pc));
            h.sub_row_multiple(r, pr, &q);
            u.sub_row_multiple(r, pr, &q);
        }
        pivots.push(pc);
        pr += 1;
    }
    HermiteForm { h, u, pivots }
}

/// A basis of the integer kernel `{x in Z^n : A x = 0}`.
///
/// The basis is saturated: it comes from rows of a unimodular transform,
/// so every integral kernel vector is an integer combination of it.
pub fn integer_kernel(a: &IntMatrix) -> Vec<IntVector> {
    let n = a.cols();
    if a.rows() == 0 {
        return (0..n)
            .map(|i| {
                let mut e = vec![BigInt::zero(); n];
                e[i] = BigInt::one();
                e
            })
            .collect();
    }
    let hf = hermite_normal_form(&a.transpose());
    (hf.rank()..n).map(|r| hf.u.row(r).to_vec()).collect()
}

/// Reduces `v` against the echelon rows of `hf.h`, returning the
/// coefficients `c` with `v = c * H` when `v` lies in the row lattice.
fn reduce_against(hf: &HermiteForm, v: &[BigInt]) -> Option<IntVector> {
    let mut rest = v.to_vec();
    let mut coeffs = vec![BigInt::zero(); hf.h.rows()];
    for (k, &pc) in hf.pivots.iter().enumerate() {
        let pivot = hf.h.get(k, pc);
        let (q, r) = rest[pc].div_rem(pivot);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (c, x) in rest.iter_mut().enumerate() {
                *x -= &q * hf.h.get(k, c);
            }
            coeffs[k] = q;
        }
    }
    rest.iter().all(Zero::is_zero).then_some(coeffs)
}

fn basis_matrix(basis: &[IntVector], dim: usize) -> Result<IntMatrix> {
    IntMatrix::from_rows(dim, basis)
}

/// True iff `v` lies in the integer span of `basis`.
pub fn lattice_membership(basis: &[IntVector], v: &[BigInt]) -> Result<bool> {
    if basis.is_empty() {
        return Ok(v.iter().all(Zero::is_zero));
    }
    let hf = hermite_normal_form(&basis_matrix(basis, v.len())?);
    Ok(reduce_against(&hf, v).is_some())
}

/// Integer coefficients `c` with `v = sum_i c_i basis_i`, if any exist.
pub fn lattice_coordinates(basis: &[IntVector], v: &[BigInt]) -> Result<Option<IntVector>> {
    if basis.is_empty() {
        return Ok(v.iter().all(Zero::is_zero).then(Vec::new));
    }
    let hf = hermite_normal_form(&basis_matrix(basis, v.len())?);
    Ok(reduce_against(&hf, v).map(|c| {
        (0..basis.len())
            .map(|j| (0..c.len()).map(|k| &c[k] * hf.u.get(k, j)).sum())
            .collect()
    }))
}

/// Rank of the lattice spanned by `vectors` in `Z^dim`.
pub fn lattice_rank(vectors: &[IntVector], dim: usize) -> Result<usize> {
    Ok(lattice_canonical_basis(vectors, dim)?.len())
}

/// Canonical form of a lattice: the nonzero rows of its Hermite normal form.
/// Two generating sets span the same lattice iff these agree.
///
/// Generators are folded in a few at a time so that the unimodular
/// transform stays small even for long generating lists.
pub fn lattice_canonical_basis(vectors: &[IntVector], dim: usize) -> Result<Vec<IntVector>> {
    let mut acc: Vec<IntVector> = Vec::new();
    for chunk in vectors.chunks(dim.max(1)) {
        let mut rows = acc;
        rows.extend_from_slice(chunk);
        let hf = hermite_normal_form(&basis_matrix(&rows, dim)?);
        acc = (0..hf.rank()).map(|r| hf.h.row(r).to_vec()).collect();
    }
    Ok(acc)
}

pub fn int_vec(xs: &[i64]) -> IntVector {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}
