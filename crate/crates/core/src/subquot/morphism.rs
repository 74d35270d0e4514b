use std::sync::Arc;

use crate::brace::HopfBrace;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::compare;
use crate::linalg::sparse;
use crate::linalg::{map_kernel, LinMap, Subspace};
use crate::report::VerificationReport;
use crate::skew::{catalog, linearize};

/// A linear map between the carriers of two braces.
#[derive(Clone, Debug)]
pub struct BraceMorphism {
    pub dom: Arc<HopfBrace>,
    pub cod: Arc<HopfBrace>,
    pub mat: LinMap,
}

impl PartialEq for BraceMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat && *self.dom == *other.dom && *self.cod == *other.cod
    }
}

/// The one-dimensional brace `k`, the zero object.
pub fn unit_object(field: Field) -> Arc<HopfBrace> {
    Arc::new(linearize(&catalog::trivial_cyclic(1), field))
}

impl BraceMorphism {
    /// Wraps a matrix after checking shapes; no structure checks.
    pub fn new(dom: Arc<HopfBrace>, cod: Arc<HopfBrace>, mat: LinMap) -> Result<Self> {
        if dom.field() != cod.field() {
            return Err(Error::FieldMismatch(dom.field(), cod.field()));
        }
        if mat.cols() != dom.dim() {
            return Err(Error::DimensionMismatch { expected: dom.dim(), found: mat.cols() });
        }
        if mat.rows() != cod.dim() {
            return Err(Error::DimensionMismatch { expected: cod.dim(), found: mat.rows() });
        }
        Ok(BraceMorphism { dom, cod, mat })
    }

    /// Like [`BraceMorphism::new`], failing unless every preservation law holds.
    pub fn verified(dom: Arc<HopfBrace>, cod: Arc<HopfBrace>, mat: LinMap) -> Result<Self> {
        let f = Self::new(dom, cod, mat)?;
        let r = verify_morphism(&f);
        if !r.all_passed() {
            return Err(Error::failed(r));
        }
        Ok(f)
    }

    pub fn identity(b: &Arc<HopfBrace>) -> Self {
        BraceMorphism { dom: b.clone(), cod: b.clone(), mat: LinMap::identity(b.field(), b.dim()) }
    }

    /// `ε: H → k`.
    pub fn counit(b: &Arc<HopfBrace>) -> Self {
        let k = unit_object(b.field());
        BraceMorphism { dom: b.clone(), cod: k, mat: b.coalg().counit_map() }
    }

    /// `u: k → H`.
    pub fn unit(b: &Arc<HopfBrace>) -> Self {
        let k = unit_object(b.field());
        BraceMorphism { dom: k, cod: b.clone(), mat: LinMap::vector(b.field(), b.unit()) }
    }

    /// The zero morphism `u ε`.
    pub fn zero(dom: &Arc<HopfBrace>, cod: &Arc<HopfBrace>) -> Self {
        let mat = LinMap::vector(cod.field(), cod.unit()).compose(&dom.coalg().counit_map());
        BraceMorphism { dom: dom.clone(), cod: cod.clone(), mat }
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &BraceMorphism) -> Result<BraceMorphism> {
        if *g.cod != *self.dom {
            return Err(Error::CodomainMismatch);
        }
        Ok(BraceMorphism { dom: g.dom.clone(), cod: self.cod.clone(), mat: self.mat.compose(&g.mat) })
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.dom.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.cod.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.dom.dim() == self.cod.dim() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<BraceMorphism> {
        let inv = self.mat.inverse()?;
        Some(BraceMorphism { dom: self.cod.clone(), cod: self.dom.clone(), mat: inv })
    }

    /// The linear kernel `ker f`.
    pub fn linear_kernel(&self) -> Subspace {
        map_kernel(&self.mat.to_mat())
    }

    pub fn is_zero_morphism(&self) -> bool {
        self.mat == BraceMorphism::zero(&self.dom, &self.cod).mat
    }
}

/// Preservation of both products, the unit, `Δ` and `ε`, plus the derived
/// compatibility with both antipodes.
pub fn verify_morphism(f: &BraceMorphism) -> VerificationReport {
    let mut r = VerificationReport::new();
    let (a, b) = (&f.dom, &f.cod);
    let n = a.dim();
    let ff = f.mat.kron(&f.mat);
    compare(&mut r, "dot", &f.mat.compose(a.mul_dot()), &b.mul_dot().compose(&ff), n, 2);
    compare(&mut r, "bullet", &f.mat.compose(a.mul_bullet()), &b.mul_bullet().compose(&ff), n, 2);
    let unit_ok = f.mat.apply(&a.unit_svec()) == b.unit_svec();
    r.record("unit", if unit_ok { None } else { Some(vec![]) });
    r.absorb("", a.coalg().map_report(b.coalg(), &f.mat));
    compare(&mut r, "antipode_dot", &f.mat.compose(a.antipode_dot()), &b.antipode_dot().compose(&f.mat), n, 1);
    compare(&mut r, "antipode_bullet", &f.mat.compose(a.antipode_bullet()), &b.antipode_bullet().compose(&f.mat), n, 1);
    r
}

/// Product `A ⊗ B` with its projections `id ⊗ ε` and `ε ⊗ id`.
pub fn tensor_brace(a: &Arc<HopfBrace>, b: &Arc<HopfBrace>) -> Result<(Arc<HopfBrace>, BraceMorphism, BraceMorphism)> {
    let t = Arc::new(crate::brace::tensor_product(a, b)?);
    let f = a.field();
    let pa = LinMap::identity(f, a.dim()).kron(&b.coalg().counit_map());
    let pb = a.coalg().counit_map().kron(&LinMap::identity(f, b.dim()));
    let pa = BraceMorphism { dom: t.clone(), cod: a.clone(), mat: pa };
    let pb = BraceMorphism { dom: t.clone(), cod: b.clone(), mat: pb };
    Ok((t, pa, pb))
}

/// `⟨f, g⟩ = (f ⊗ g)Δ` into a product built by [`tensor_brace`].
pub fn pair_into_product(product: &Arc<HopfBrace>, f: &BraceMorphism, g: &BraceMorphism) -> Result<BraceMorphism> {
    if *f.dom != *g.dom {
        return Err(Error::NotParallel);
    }
    let mat = f.mat.kron_compose(&g.mat, f.dom.coalg().comul());
    BraceMorphism::new(f.dom.clone(), product.clone(), mat)
}

/// Matrix whose columns are the basis vectors of `s`.
pub(crate) fn inclusion_matrix(s: &Subspace) -> LinMap {
    let f = s.field();
    LinMap::from_columns(f, s.ambient_dim(), s.vectors().iter().map(|v| sparse::from_dense(v)).collect())
}

pub(crate) fn basis_svecs(s: &Subspace) -> Vec<crate::linalg::SVec> {
    s.vectors().iter().map(|v| sparse::from_dense(v)).collect()
}

pub(crate) fn svec_space(field: Field, n: usize, vs: &[crate::linalg::SVec]) -> Subspace {
    let dense: Vec<_> = vs.iter().map(|v| sparse::to_dense(v, field, n)).collect();
    Subspace::span(field, n, &dense)
}
