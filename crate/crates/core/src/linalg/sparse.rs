//! Sparse vectors and linear maps, used for structure tensors.

use std::collections::BTreeMap;

use crate::field::{Field, Scalar};
use crate::linalg::Mat;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SVec = Vec<(usize, Scalar)>;

/// Accumulates a linear combination of sparse terms.
#[derive(Default)]
pub struct Acc(BTreeMap<usize, Scalar>);

impl Acc {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, idx: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&idx) {
            Some(x) => x.add_assign_ref(c),
            None => {
                self.0.insert(idx, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, v: &SVec, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (i, x) in v {
            self.add(*i, &(x * s));
        }
    }

    pub fn add_vec(&mut self, v: &SVec) {
        for (i, x) in v {
            self.add(*i, x);
        }
    }

    pub fn finish(self) -> SVec {
        self.0.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }
}

pub fn unit_vec(field: Field, i: usize) -> SVec {
    vec![(i, field.one())]
}

pub fn scale(v: &SVec, s: &Scalar) -> SVec {
    if s.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * s)).collect()
}

pub fn sub(a: &SVec, b: &SVec) -> SVec {
    let mut acc = Acc::new();
    acc.add_vec(a);
    for (i, x) in b {
        acc.add(*i, &-x);
    }
    acc.finish()
}

pub fn add(a: &SVec, b: &SVec) -> SVec {
    let mut acc = Acc::new();
    acc.add_vec(a);
    acc.add_vec(b);
    acc.finish()
}

/// `a ⊗ b` with index `i * dim_b + j`.
pub fn tensor(a: &SVec, b: &SVec, dim_b: usize) -> SVec {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a {
        for (j, y) in b {
            out.push((i * dim_b + j, x * y));
        }
    }
    out
}

pub fn to_dense(v: &SVec, field: Field, len: usize) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn from_dense(v: &[Scalar]) -> SVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Mixed-radix digits of `idx` in base `n`, most significant first.
pub fn split_index(mut idx: usize, n: usize, arity: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    out
}

/// Linear map stored column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    field: Field,
    rows: usize,
    columns: Vec<SVec>,
}

impl LinMap {
    pub fn from_columns(field: Field, rows: usize, columns: Vec<SVec>) -> Self {
        debug_assert!(columns.iter().all(|c| c.iter().all(|(i, _)| *i < rows)));
        LinMap { field, rows, columns }
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl FnMut(usize) -> SVec) -> Self {
        Self::from_columns(field, rows, (0..cols).map(f).collect())
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self::from_fn(field, n, n, |j| unit_vec(field, j))
    }

    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        Self::from_columns(field, rows, vec![Vec::new(); cols])
    }

    pub fn from_mat(m: &Mat) -> Self {
        Self::from_fn(m.field(), m.rows(), m.cols(), |j| from_dense(&m.column(j)))
    }

    pub fn to_mat(&self) -> Mat {
        let cols: Vec<Vec<Scalar>> = self.columns.iter().map(|c| to_dense(c, self.field, self.rows)).collect();
        Mat::from_columns(self.field, self.rows, &cols)
    }

    /// Row vector of a functional given densely.
    pub fn functional(field: Field, v: &[Scalar]) -> Self {
        Self::from_fn(field, 1, v.len(), |j| if v[j].is_zero() { Vec::new() } else { vec![(0, v[j].clone())] })
    }

    /// Column vector map `k -> k^n` sending 1 to `v`.
    pub fn vector(field: Field, v: &[Scalar]) -> Self {
        Self::from_columns(field, v.len(), vec![from_dense(v)])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn col(&self, j: usize) -> &SVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SVec] {
        &self.columns
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.columns[j].iter().find(|(r, _)| *r == i).map_or(self.field.zero(), |(_, x)| x.clone())
    }

    pub fn set_column(&mut self, j: usize, v: SVec) {
        self.columns[j] = v;
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (j, x) in v {
            acc.add_scaled(&self.columns[*j], x);
        }
        acc.finish()
    }

    pub fn apply_dense(&self, v: &[Scalar]) -> Vec<Scalar> {
        to_dense(&self.apply(&from_dense(v)), self.field, self.rows)
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &LinMap) -> LinMap {
        assert_eq!(self.cols(), rhs.rows, "composition shape");
        Self::from_columns(self.field, self.rows, rhs.columns.iter().map(|c| self.apply(c)).collect())
    }

    /// `self ⊗ rhs`, with index `i * dim_rhs + j` on both sides.
    pub fn kron(&self, rhs: &LinMap) -> LinMap {
        let mut columns = Vec::with_capacity(self.cols() * rhs.cols());
        for a in &self.columns {
            for b in &rhs.columns {
                columns.push(tensor(a, b, rhs.rows));
            }
        }
        Self::from_columns(self.field, self.rows * rhs.rows, columns)
    }

    pub fn add(&self, rhs: &LinMap) -> LinMap {
        assert_eq!((self.rows, self.cols()), (rhs.rows, rhs.cols()));
        Self::from_columns(self.field, self.rows, self.columns.iter().zip(&rhs.columns).map(|(a, b)| add(a, b)).collect())
    }

    pub fn sub(&self, rhs: &LinMap) -> LinMap {
        assert_eq!((self.rows, self.cols()), (rhs.rows, rhs.cols()));
        Self::from_columns(self.field, self.rows, self.columns.iter().zip(&rhs.columns).map(|(a, b)| sub(a, b)).collect())
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        Self::from_columns(self.field, self.rows, self.columns.iter().map(|c| scale(c, s)).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols() && self.columns.iter().enumerate().all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// First column where the two maps differ.
    pub fn first_difference(&self, rhs: &LinMap) -> Option<usize> {
        assert_eq!(self.cols(), rhs.cols());
        (0..self.cols()).find(|&j| self.columns[j] != rhs.columns[j])
    }

    pub fn rank(&self) -> usize {
        self.to_mat().rank()
    }

    pub fn inverse(&self) -> Option<LinMap> {
        self.to_mat().inverse().map(|m| LinMap::from_mat(&m))
    }

    /// `(self ⊗ rhs) v` without materializing the Kronecker product.
    pub fn kron_apply(&self, rhs: &LinMap, v: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (idx, x) in v {
            let (i, j) = (idx / rhs.cols(), idx % rhs.cols());
            acc.add_scaled(&tensor(&self.columns[i], &rhs.columns[j], rhs.rows), x);
        }
        acc.finish()
    }

    /// `(self ⊗ rhs) ∘ m`.
    pub fn kron_compose(&self, rhs: &LinMap, m: &LinMap) -> LinMap {
        assert_eq!(self.cols() * rhs.cols(), m.rows, "composition shape");
        Self::from_columns(self.field, self.rows * rhs.rows, m.columns.iter().map(|c| self.kron_apply(rhs, c)).collect())
    }

    /// The flip `x ⊗ y ↦ y ⊗ x` on `k^a ⊗ k^b`.
    pub fn flip(field: Field, a: usize, b: usize) -> LinMap {
        Self::from_fn(field, a * b, a * b, |idx| unit_vec(field, (idx % b) * a + idx / b))
    }

    /// Permutes tensor factors of dimensions `dims`: output factor `t` is input factor `perm[t]`.
    pub fn permutation(field: Field, dims: &[usize], perm: &[usize]) -> LinMap {
        let total: usize = dims.iter().product();
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        Self::from_fn(field, total, total, |idx| {
            let mut digits = vec![0; dims.len()];
            let mut rest = idx;
            for (k, d) in dims.iter().enumerate().rev() {
                digits[k] = rest % d;
                rest /= d;
            }
            let mut out = 0;
            for (t, &p) in perm.iter().enumerate() {
                out = out * out_dims[t] + digits[p];
            }
            unit_vec(field, out)
        })
    }
}
