use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Mat;

/// A subspace of `k^n`, stored as the rows of its reduced row echelon basis.
///
/// The representation is canonical, so structural equality is equality of
/// subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// The span of `vectors`, each of length `ambient`.
    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        Self::from_rows(Mat::from_rows(field, ambient, vectors))
    }

    /// The row space of `m`.
    pub fn from_rows(m: Mat) -> Self {
        let ambient = m.cols();
        let (red, pivots) = m.rref();
        let basis = red.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace { ambient, basis, pivots }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn vector(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ambient
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: len });
        }
        Ok(())
    }

    /// `v` minus its projection along the basis onto the pivot coordinates.
    fn residual(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p].clone();
            if c.is_zero() {
                continue;
            }
            let neg = -&c;
            for (x, b) in r.iter_mut().zip(self.basis.row(i)) {
                x.add_product(&neg, b);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_len(v.len())?;
        Ok(self.residual(v).iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient || !self.residual(v).iter().all(Scalar::is_zero) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the echelon basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![self.field().zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(i)) {
                o.add_product(c, b);
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient)?;
        Ok(Subspace::from_rows(self.basis.vstack(&other.basis)))
    }

    /// Adds vectors to the span.
    pub fn extend(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        if vectors.is_empty() {
            return self.clone();
        }
        Subspace::from_rows(self.basis.vstack(&Mat::from_rows(self.field(), self.ambient, vectors)))
    }

    /// Zassenhaus intersection: reduce `[[A, A], [B, 0]]`; the rows whose left
    /// half vanishes span `A ∩ B` in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient)?;
        let n = self.ambient;
        let field = self.field();
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for v in self.basis.row_vectors() {
            let mut r = v.clone();
            r.extend(v);
            rows.push(r);
        }
        for v in other.basis.row_vectors() {
            let mut r = v;
            r.extend(std::iter::repeat_n(field.zero(), n));
            rows.push(r);
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(field, n));
        }
        let (red, pivots) = Mat::from_rows(field, 2 * n, &rows).rref();
        let tail: Vec<Vec<Scalar>> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(r, _)| red.row(r)[n..].to_vec())
            .collect();
        Ok(Subspace::span(field, n, &tail))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_len(other.ambient)?;
        for v in self.basis.row_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image under a linear map.
    pub fn image(&self, m: &Mat) -> Subspace {
        let vs: Vec<Vec<Scalar>> = self.basis.row_vectors().iter().map(|v| m.apply(v)).collect();
        Subspace::span(self.field(), m.rows(), &vs)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, v) in self.vectors().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        write!(f, "}} ⊂ k^{}", self.ambient)
    }
}

/// `{v : m v = 0}`.
pub fn map_kernel(m: &Mat) -> Subspace {
    let field = m.field();
    let n = m.cols();
    let (red, pivots) = m.rref();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let vectors: Vec<Vec<Scalar>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![field.zero(); n];
            v[f] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(r, f);
            }
            v
        })
        .collect();
    Subspace::span(field, n, &vectors)
}

/// A projection `k^n -> k^{n - dim i}` with kernel `i`, and a section of it.
///
/// The complement is the span of the coordinate vectors at the non-pivot
/// columns of `i`'s echelon basis, so the section is a coordinate inclusion.
pub fn quotient_with_section(i: &Subspace) -> (Mat, Mat) {
    let field = i.field();
    let n = i.ambient_dim();
    let complement: Vec<usize> = (0..n).filter(|c| !i.pivots().contains(c)).collect();
    let q = complement.len();
    // proj(e_j) = residual(e_j) restricted to complement coordinates.
    let mut proj = Mat::zeros(field, q, n);
    for j in 0..n {
        let mut e = vec![field.zero(); n];
        e[j] = field.one();
        let r = i.residual(&e);
        for (row, &c) in complement.iter().enumerate() {
            proj.set(row, j, r[c].clone());
        }
    }
    let mut sect = Mat::zeros(field, n, q);
    for (col, &c) in complement.iter().enumerate() {
        sect.set(c, col, field.one());
    }
    (proj, sect)
}
