//! Sub-braces, ideals, quotients and closures.

use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use crate::brace::HopfBrace;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{generated_subcoalgebra, CoalgebraData};
use crate::linalg::sparse::{self, from_dense, to_dense, unit_vec};
use crate::linalg::{quotient_with_section, LinMap, SVec, Subspace};
use crate::report::VerificationReport;
use crate::subquot::morphism::{basis_svecs, inclusion_matrix, svec_space, BraceMorphism};

pub(crate) fn contains(space: &Subspace, v: &SVec) -> bool {
    space.contains(&to_dense(v, space.field(), space.ambient_dim())).expect("ambient dimensions agree")
}

/// `v ∈ V ⊗ V` for `v` in `k^n ⊗ k^n`: every row and column of its
/// coefficient matrix lies in `V`.
pub(crate) fn in_tensor_square(space: &Subspace, v: &SVec) -> bool {
    let n = space.ambient_dim();
    let f = space.field();
    let d = to_dense(v, f, n * n);
    (0..n).all(|r| {
        let row = &d[r * n..(r + 1) * n];
        let col: Vec<Scalar> = (0..n).map(|k| d[k * n + r].clone()).collect();
        space.contains(row).unwrap() && space.contains(&col).unwrap()
    })
}

/// Closure laws of a sub-brace: unit, both products, both antipodes, and
/// `Δ(V) ⊆ V ⊗ V`. Witnesses index the echelon basis of `space`.
pub fn sub_brace_report(parent: &HopfBrace, space: &Subspace) -> VerificationReport {
    let mut r = VerificationReport::new();
    let vs = basis_svecs(space);
    let d = vs.len();
    r.record("contains_unit", if contains(space, &parent.unit_svec()) { None } else { Some(vec![]) });
    let pairs = |op: &dyn Fn(&SVec, &SVec) -> SVec| {
        (0..d * d).map(|idx| (idx / d, idx % d)).find(|&(i, j)| !contains(space, &op(&vs[i], &vs[j]))).map(|(i, j)| vec![i, j])
    };
    r.record("closed_dot", pairs(&|a, b| parent.dot(a, b)));
    r.record("closed_bullet", pairs(&|a, b| parent.bullet(a, b)));
    let singles = |op: &dyn Fn(&SVec) -> SVec| (0..d).find(|&i| !contains(space, &op(&vs[i]))).map(|i| vec![i]);
    r.record("closed_antipode_dot", singles(&|a| parent.s(a)));
    r.record("closed_antipode_bullet", singles(&|a| parent.t(a)));
    r.record("subcoalgebra", (0..d).find(|&i| !in_tensor_square(space, &parent.delta(&vs[i]))).map(|i| vec![i]));
    r
}

/// A subspace of a brace, with lazily computed closure and normality flags.
pub struct SubBrace {
    parent: Arc<HopfBrace>,
    space: Subspace,
    report: OnceLock<VerificationReport>,
    normal: OnceLock<bool>,
}

impl Clone for SubBrace {
    fn clone(&self) -> Self {
        SubBrace { parent: self.parent.clone(), space: self.space.clone(), report: self.report.clone(), normal: self.normal.clone() }
    }
}

impl PartialEq for SubBrace {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && *self.parent == *other.parent
    }
}

impl Eq for SubBrace {}

impl std::fmt::Debug for SubBrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubBrace").field("space", &self.space).finish_non_exhaustive()
    }
}

impl SubBrace {
    /// Unchecked; see [`SubBrace::is_sub_brace`].
    pub fn new(parent: Arc<HopfBrace>, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != parent.dim() {
            return Err(Error::DimensionMismatch { expected: parent.dim(), found: space.ambient_dim() });
        }
        Ok(SubBrace { parent, space, report: OnceLock::new(), normal: OnceLock::new() })
    }

    pub fn verified(parent: Arc<HopfBrace>, space: Subspace) -> Result<Self> {
        let s = Self::new(parent, space)?;
        if !s.is_sub_brace() {
            return Err(Error::failed(s.report().clone()));
        }
        Ok(s)
    }

    pub fn full(parent: &Arc<HopfBrace>) -> Self {
        Self::new(parent.clone(), Subspace::full(parent.field(), parent.dim())).unwrap()
    }

    /// `k·1`.
    pub fn trivial(parent: &Arc<HopfBrace>) -> Self {
        let one = parent.unit().to_vec();
        Self::new(parent.clone(), Subspace::span(parent.field(), parent.dim(), &[one])).unwrap()
    }

    pub fn parent(&self) -> &Arc<HopfBrace> {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn report(&self) -> &VerificationReport {
        self.report.get_or_init(|| sub_brace_report(&self.parent, &self.space))
    }

    pub fn is_sub_brace(&self) -> bool {
        self.report().all_passed()
    }

    /// Condition (1) of normality: closure under `a₁·b·S(a₂)`,
    /// `a₁•b•T(a₂)` and `a⇀b`.
    pub fn is_normal(&self) -> bool {
        *self.normal.get_or_init(|| self.is_sub_brace() && normality_report(self).all_passed())
    }

    pub fn contains(&self, v: &SVec) -> bool {
        contains(&self.space, v)
    }

    pub fn basis(&self) -> Vec<SVec> {
        basis_svecs(&self.space)
    }

    /// The sub-brace as a brace in its own right, in the echelon basis, with
    /// its inclusion.
    pub fn to_brace(&self) -> Result<(Arc<HopfBrace>, BraceMorphism)> {
        if !self.is_sub_brace() {
            return Err(Error::failed(self.report().clone()));
        }
        let p = &self.parent;
        let f = p.field();
        let vs = self.basis();
        let d = vs.len();
        let piv = self.space.pivots().to_vec();
        // In echelon form the coordinates of w ∈ V are its pivot entries.
        let coords = |w: &SVec| -> SVec {
            let dense = to_dense(w, f, p.dim());
            from_dense(&piv.iter().map(|&c| dense[c].clone()).collect::<Vec<_>>())
        };
        let n = p.dim();
        let comul = LinMap::from_fn(f, d * d, d, |i| {
            let dd = to_dense(&p.delta(&vs[i]), f, n * n);
            let mut out = Vec::new();
            for (j, &pj) in piv.iter().enumerate() {
                for (k, &pk) in piv.iter().enumerate() {
                    let c = &dd[pj * n + pk];
                    if !c.is_zero() {
                        out.push((j * d + k, c.clone()));
                    }
                }
            }
            out
        });
        let counit = vs.iter().map(|v| p.eps(v)).collect();
        let names = vs.iter().map(|v| combination_name(p.basis_names(), v)).collect();
        let coalg = CoalgebraData::from_map(f, names, comul, counit, p.coalg().cocommutative())?;
        let prod = |op: &dyn Fn(&SVec, &SVec) -> SVec| LinMap::from_fn(f, d, d * d, |idx| coords(&op(&vs[idx / d], &vs[idx % d])));
        let dot = prod(&|a, b| p.dot(a, b));
        let bullet = prod(&|a, b| p.bullet(a, b));
        let s = LinMap::from_fn(f, d, d, |i| coords(&p.s(&vs[i])));
        let t = LinMap::from_fn(f, d, d, |i| coords(&p.t(&vs[i])));
        let unit = to_dense(&coords(&p.unit_svec()), f, d);
        let b = Arc::new(HopfBrace::from_raw(coalg, dot, bullet, unit, s, t));
        let incl = BraceMorphism::new(b.clone(), p.clone(), inclusion_matrix(&self.space))?;
        Ok((b, incl))
    }
}

/// Readable name for `Σ c_i e_i`, e.g. `e0-e2`.
pub(crate) fn combination_name(names: &[String], v: &SVec) -> String {
    let mut s = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let (num, den) = c.to_ratio();
        let neg = num < 0.into();
        let abs = if neg { -num.clone() } else { num.clone() };
        if k > 0 || neg {
            s.push(if neg { '-' } else { '+' });
        }
        if abs != 1.into() || den != 1.into() {
            let _ = write!(s, "{abs}");
            if den != 1.into() {
                let _ = write!(s, "/{den}");
            }
            s.push('*');
        }
        s.push_str(&names[*i]);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Condition (1) checks on a sub-brace, over basis elements `a` of the
/// parent and `b` of the sub-brace.
pub fn normality_report(b: &SubBrace) -> VerificationReport {
    let mut r = VerificationReport::new();
    let p = b.parent();
    let n = p.dim();
    let vs = b.basis();
    let d = vs.len();
    let conj = |a: usize, x: &SVec, bullet: bool| -> SVec {
        let mut acc = sparse::Acc::new();
        for (a1, a2, c) in p.sweedler(&p.e(a)) {
            let v = if bullet { p.bullet(&p.bullet(&a1, x), &p.t(&a2)) } else { p.dot(&p.dot(&a1, x), &p.s(&a2)) };
            acc.add_scaled(&v, &c);
        }
        acc.finish()
    };
    let sweep = |g: &dyn Fn(usize, &SVec) -> SVec| {
        (0..n * d).map(|idx| (idx / d, idx % d)).find(|&(a, j)| !b.contains(&g(a, &vs[j]))).map(|(a, j)| vec![a, j])
    };
    r.record("dot_conjugation", sweep(&|a, x| conj(a, x, false)));
    r.record("bullet_conjugation", sweep(&|a, x| conj(a, x, true)));
    r.record("action", sweep(&|a, x| p.left(&p.e(a), x)));
    r
}

/// `B⁺ = B ∩ ker ε`.
pub fn augmentation(b: &SubBrace) -> Subspace {
    let p = b.parent();
    let f = p.field();
    let eps = crate::linalg::map_kernel(&p.coalg().counit_map().to_mat());
    b.space().intersect(&eps).unwrap_or_else(|_| Subspace::zero(f, p.dim()))
}

/// `span{a·x}` (or `a•x`) over the parent basis and a spanning set of `x`.
fn product_span(p: &HopfBrace, xs: &Subspace, bullet: bool) -> Subspace {
    let mut vs = Vec::new();
    for a in 0..p.dim() {
        for x in basis_svecs(xs) {
            vs.push(if bullet { p.bullet(&p.e(a), &x) } else { p.dot(&p.e(a), &x) });
        }
    }
    svec_space(p.field(), p.dim(), &vs)
}

/// A two-sided ideal for both products that is a coideal stable under
/// both antipodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceIdeal {
    pub parent: Arc<HopfBrace>,
    pub space: Subspace,
}

impl BraceIdeal {
    pub fn verified(parent: Arc<HopfBrace>, space: Subspace) -> Result<Self> {
        let r = ideal_report(&parent, &space);
        if !r.all_passed() {
            return Err(Error::failed(r));
        }
        Ok(BraceIdeal { parent, space })
    }

    pub fn zero(parent: &Arc<HopfBrace>) -> Self {
        BraceIdeal { parent: parent.clone(), space: Subspace::zero(parent.field(), parent.dim()) }
    }
}

/// The ideal axioms; witnesses are (parent basis index, ideal basis index).
pub fn ideal_report(p: &HopfBrace, space: &Subspace) -> VerificationReport {
    let mut r = VerificationReport::new();
    let n = p.dim();
    let vs = basis_svecs(space);
    let d = vs.len();
    let sweep = |g: &dyn Fn(&SVec, &SVec) -> SVec| {
        (0..n * d).map(|idx| (idx / d, idx % d)).find(|&(a, j)| !contains(space, &g(&p.e(a), &vs[j]))).map(|(a, j)| vec![a, j])
    };
    r.record("left_ideal_dot", sweep(&|a, x| p.dot(a, x)));
    r.record("right_ideal_dot", sweep(&|a, x| p.dot(x, a)));
    r.record("left_ideal_bullet", sweep(&|a, x| p.bullet(a, x)));
    r.record("right_ideal_bullet", sweep(&|a, x| p.bullet(x, a)));
    // Δ(I) ⊆ I⊗H + H⊗I  ⇔  (q⊗q)Δ(I) = 0.
    let (q, _) = quotient_with_section(space);
    let q = LinMap::from_mat(&q);
    r.record("coideal", (0..d).find(|&j| !q.kron_apply(&q, &p.delta(&vs[j])).is_empty()).map(|j| vec![j]));
    r.record("counit_vanishes", (0..d).find(|&j| !p.eps(&vs[j]).is_zero()).map(|j| vec![j]));
    r.record("antipode_dot_stable", (0..d).find(|&j| !contains(space, &p.s(&vs[j]))).map(|j| vec![j]));
    r.record("antipode_bullet_stable", (0..d).find(|&j| !contains(space, &p.t(&vs[j]))).map(|j| vec![j]));
    r
}

/// A quotient brace with its projection and the coordinate section used to
/// build it.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub brace: Arc<HopfBrace>,
    pub proj: BraceMorphism,
    pub section: LinMap,
}

/// `H/I`, on the span of the coordinates not pivotal in `I`.
pub fn quotient_by_ideal(ideal: &BraceIdeal) -> Result<Quotient> {
    let p = &ideal.parent;
    let f = p.field();
    let n = p.dim();
    let (q, s) = quotient_with_section(&ideal.space);
    let (q, s) = (LinMap::from_mat(&q), LinMap::from_mat(&s));
    let m = q.rows();
    let lift = |i: usize| s.col(i).clone();
    let prod = |mul: &LinMap| LinMap::from_fn(f, m, m * m, |idx| q.apply(&mul.apply(&sparse::tensor(&lift(idx / m), &lift(idx % m), n))));
    let dot = prod(p.mul_dot());
    let bullet = prod(p.mul_bullet());
    let comul = q.kron_compose(&q, &p.coalg().comul().compose(&s));
    let counit = (0..m).map(|i| p.eps(&lift(i))).collect();
    let names = (0..n).filter(|c| !ideal.space.pivots().contains(c)).map(|c| p.basis_names()[c].clone()).collect();
    let coalg = CoalgebraData::from_map(f, names, comul, counit, p.coalg().cocommutative())?;
    let unit = to_dense(&q.apply(&p.unit_svec()), f, m);
    let sm = q.compose(p.antipode_dot()).compose(&s);
    let tm = q.compose(p.antipode_bullet()).compose(&s);
    let brace = Arc::new(HopfBrace::from_raw(coalg, dot, bullet, unit, sm, tm));
    let proj = BraceMorphism::new(p.clone(), brace.clone(), q)?;
    Ok(Quotient { brace, proj, section: s })
}

/// `Hker(f) = {h : h₁ ⊗ f(h₂) = h ⊗ 1}`.
pub fn hkernel(f: &BraceMorphism) -> SubBrace {
    let a = &f.dom;
    let fld = a.field();
    let id = LinMap::identity(fld, a.dim());
    let u = LinMap::vector(fld, f.cod.unit());
    let map = id.kron_compose(&f.mat, a.coalg().comul()).sub(&id.kron(&u));
    SubBrace::new(a.clone(), crate::linalg::map_kernel(&map.to_mat())).unwrap()
}

/// `{h : h₁ ⊗ f(h₂) = h₁ ⊗ g(h₂)}`.
pub fn equalizer(f: &BraceMorphism, g: &BraceMorphism) -> Result<SubBrace> {
    if *f.dom != *g.dom || *f.cod != *g.cod {
        return Err(Error::NotParallel);
    }
    let a = &f.dom;
    let id = LinMap::identity(a.field(), a.dim());
    let map = id.kron_compose(&f.mat.sub(&g.mat), a.coalg().comul());
    SubBrace::new(a.clone(), crate::linalg::map_kernel(&map.to_mat()))
}

/// `A ×_C B ⊆ A ⊗ B` with its two projections.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub product: Arc<HopfBrace>,
    pub sub: SubBrace,
    pub brace: Arc<HopfBrace>,
    pub inclusion: BraceMorphism,
    pub proj_a: BraceMorphism,
    pub proj_b: BraceMorphism,
    f: BraceMorphism,
    g: BraceMorphism,
}

/// `{Σ a⊗b : a₁⊗f(a₂)⊗b = a⊗g(b₁)⊗b₂}`.
pub fn pullback(f: &BraceMorphism, g: &BraceMorphism) -> Result<Pullback> {
    if *f.cod != *g.cod {
        return Err(Error::CodomainMismatch);
    }
    let (a, b, c) = (&f.dom, &g.dom, &f.cod);
    let (na, nb, nc) = (a.dim(), b.dim(), c.dim());
    let fld = a.field();
    let (product, pa, pb) = crate::subquot::morphism::tensor_brace(a, b)?;
    let idx3 = |x: usize, y: usize, z: usize| (x * nc + y) * nb + z;
    let map = LinMap::from_fn(fld, na * nc * nb, na * nb, |col| {
        let (i, j) = (col / nb, col % nb);
        let mut acc = sparse::Acc::new();
        for (a1, a2, ca) in a.coalg().comul_terms(i) {
            for (y, cy) in f.mat.col(a2) {
                acc.add(idx3(a1, *y, j), &(&ca * cy));
            }
        }
        for (b1, b2, cb) in b.coalg().comul_terms(j) {
            for (y, cy) in g.mat.col(b1) {
                acc.add(idx3(i, *y, b2), &-(&cb * cy));
            }
        }
        acc.finish()
    });
    let sub = SubBrace::verified(product.clone(), crate::linalg::map_kernel(&map.to_mat()))?;
    let (brace, inclusion) = sub.to_brace()?;
    let proj_a = pa.compose(&inclusion)?;
    let proj_b = pb.compose(&inclusion)?;
    Ok(Pullback { product, sub, brace, inclusion, proj_a, proj_b, f: f.clone(), g: g.clone() })
}

impl Pullback {
    /// The unique `D → A ×_C B` through which `p` and `q` factor.
    pub fn mediate(&self, p: &BraceMorphism, q: &BraceMorphism) -> Result<BraceMorphism> {
        if self.f.compose(p)?.mat != self.g.compose(q)?.mat {
            return Err(Error::NotCommutative("f∘p ≠ g∘q".into()));
        }
        let pair = crate::subquot::morphism::pair_into_product(&self.product, p, q)?;
        let f = self.sub.parent().field();
        let piv = self.sub.space().pivots().to_vec();
        let m = self.sub.space().ambient_dim();
        let mut cols = Vec::new();
        for v in pair.mat.columns() {
            if !self.sub.contains(v) {
                return Err(Error::NotCommutative("pairing leaves the pullback".into()));
            }
            let dense = to_dense(v, f, m);
            cols.push(from_dense(&piv.iter().map(|&c| dense[c].clone()).collect::<Vec<_>>()));
        }
        let mat = LinMap::from_columns(f, self.brace.dim(), cols);
        BraceMorphism::new(p.dom.clone(), self.brace.clone(), mat)
    }

    /// Uniqueness of mediating maps: the two projections are jointly injective.
    pub fn projections_jointly_injective(&self) -> bool {
        crate::subquot::morphism::pair_into_product(&self.product, &self.proj_a, &self.proj_b)
            .map(|m| m.is_injective())
            .unwrap_or(false)
    }
}

fn close_under(p: &HopfBrace, w: &Subspace, extra: &dyn Fn(&Subspace) -> Vec<SVec>) -> Subspace {
    let f = p.field();
    let n = p.dim();
    let mut w = w.extend(&[p.unit().to_vec()]);
    loop {
        let vs = basis_svecs(&w);
        let mut new: Vec<SVec> = Vec::new();
        for x in &vs {
            for y in &vs {
                new.push(p.dot(x, y));
                new.push(p.bullet(x, y));
            }
            new.push(p.s(x));
            new.push(p.t(x));
        }
        new.extend(extra(&w));
        let dense: Vec<_> = new.iter().map(|v| to_dense(v, f, n)).collect();
        let next = generated_subcoalgebra(p.coalg(), &w.extend(&dense));
        if next.dim() == w.dim() {
            return w;
        }
        w = next;
    }
}

/// Smallest sub-brace containing `seed`.
pub fn generated_subbrace(parent: &Arc<HopfBrace>, seed: &Subspace) -> SubBrace {
    let w = close_under(parent, seed, &|_| Vec::new());
    SubBrace::new(parent.clone(), w).unwrap()
}

/// Smallest normal sub-brace containing `seed`.
pub fn normal_closure(parent: &Arc<HopfBrace>, seed: &Subspace) -> SubBrace {
    let p = parent.as_ref();
    let f = p.field();
    let extra = |w: &Subspace| {
        let mut out = Vec::new();
        for a in 0..p.dim() {
            let sw = p.sweedler(&unit_vec(f, a));
            for x in basis_svecs(w) {
                let mut c1 = sparse::Acc::new();
                let mut c2 = sparse::Acc::new();
                for (a1, a2, c) in &sw {
                    c1.add_scaled(&p.dot(&p.dot(a1, &x), &p.s(a2)), c);
                    c2.add_scaled(&p.bullet(&p.bullet(a1, &x), &p.t(a2)), c);
                }
                out.push(c1.finish());
                out.push(c2.finish());
                out.push(p.left(&p.e(a), &x));
            }
        }
        out
    };
    let w = close_under(p, seed, &extra);
    SubBrace::new(parent.clone(), w).unwrap()
}

/// The three equivalent characterizations of normality, evaluated separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityConditions {
    /// Closure under both conjugations and `⇀`.
    pub closure: bool,
    /// `A·B⁺ = A•B⁺`, and this span is a brace ideal.
    pub ideal: bool,
    /// `B` is the kernel of the projection onto `H/(A·B⁺)`.
    pub kernel: bool,
}

impl NormalityConditions {
    pub fn agree(&self) -> bool {
        self.closure == self.ideal && self.ideal == self.kernel
    }
}

pub fn normality_conditions(b: &SubBrace) -> NormalityConditions {
    let p = b.parent();
    let closure = b.is_normal();
    let plus = augmentation(b);
    let dot = product_span(p, &plus, false);
    let bullet = product_span(p, &plus, true);
    let is_ideal = ideal_report(p, &dot).all_passed();
    let ideal = dot == bullet && is_ideal;
    let kernel = is_ideal
        && quotient_by_ideal(&BraceIdeal { parent: p.clone(), space: dot })
            .map(|q| hkernel(&q.proj).space() == b.space())
            .unwrap_or(false);
    NormalityConditions { closure, ideal, kernel }
}

/// `A·B⁺`, checked equal to `A•B⁺` and verified as an ideal.
pub fn ideal_from_normal(b: &SubBrace) -> Result<BraceIdeal> {
    if !b.is_normal() {
        return Err(Error::NormalityFailure);
    }
    let p = b.parent();
    let plus = augmentation(b);
    let dot = product_span(p, &plus, false);
    if dot != product_span(p, &plus, true) {
        return Err(Error::NormalityFailure);
    }
    BraceIdeal::verified(p.clone(), dot)
}

/// The quotient projection `H → H/A·B⁺`.
pub fn cokernel_of_normal(b: &SubBrace) -> Result<Quotient> {
    quotient_by_ideal(&ideal_from_normal(b)?)
}

/// `ḡ` with `ḡ ∘ proj = g`, when `g` is constant on the fibres of `proj`.
pub fn factor_through(q: &Quotient, g: &BraceMorphism) -> Result<BraceMorphism> {
    if *g.dom != *q.proj.dom {
        return Err(Error::CodomainMismatch);
    }
    let bar = BraceMorphism::new(q.brace.clone(), g.cod.clone(), g.mat.compose(&q.section))?;
    if bar.mat.compose(&q.proj.mat) != g.mat {
        return Err(Error::NotCommutative("map does not vanish on the ideal".into()));
    }
    Ok(bar)
}

/// `f = i ∘ p` with `p` the cokernel of `Hker(f)` and `i` injective.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub kernel: SubBrace,
    pub ideal: BraceIdeal,
    pub quotient: Quotient,
    pub p: BraceMorphism,
    pub i: BraceMorphism,
}

pub fn epi_mono_factorize(f: &BraceMorphism) -> Result<Factorization> {
    let kernel = hkernel(f);
    let ideal = ideal_from_normal(&kernel)?;
    if ideal.space != f.linear_kernel() {
        let mut r = VerificationReport::new();
        r.record("kernel_ideal_matches_linear_kernel", Some(vec![]));
        return Err(Error::failed(r));
    }
    let quotient = quotient_by_ideal(&ideal)?;
    let i = BraceMorphism::new(quotient.brace.clone(), f.cod.clone(), f.mat.compose(&quotient.section))?;
    let p = quotient.proj.clone();
    debug_assert_eq!(i.mat.compose(&p.mat), f.mat);
    Ok(Factorization { kernel, ideal, quotient, p, i })
}

/// `f(A)` as a sub-brace of the codomain.
pub fn image_subbrace(f: &BraceMorphism) -> Result<SubBrace> {
    let space = svec_space(f.cod.field(), f.cod.dim(), f.mat.columns());
    SubBrace::verified(f.cod.clone(), space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skew::{catalog, linearize};
    use crate::field::Field;
    use crate::subquot::morphism::verify_morphism;

    fn q() -> Field {
        Field::Rationals
    }

    fn b4() -> Arc<HopfBrace> {
        Arc::new(linearize(&catalog::b4(), q()))
    }

    fn c2() -> Arc<HopfBrace> {
        Arc::new(linearize(&catalog::trivial_cyclic(2), q()))
    }

    fn mod2(b: &Arc<HopfBrace>, c: &Arc<HopfBrace>) -> BraceMorphism {
        let f = q();
        BraceMorphism::new(b.clone(), c.clone(), LinMap::from_fn(f, 2, 4, |i| unit_vec(f, i % 2))).unwrap()
    }

    fn span_e(n: usize, idx: &[usize]) -> Subspace {
        let f = q();
        let vs: Vec<_> = idx.iter().map(|&i| to_dense(&unit_vec(f, i), f, n)).collect();
        Subspace::span(f, n, &vs)
    }

    #[test]
    fn b4_kernel_and_quotient() {
        let (b, c) = (b4(), c2());
        let f = mod2(&b, &c);
        assert!(verify_morphism(&f).all_passed());
        let k = hkernel(&f);
        assert_eq!(k.space(), &span_e(4, &[0, 2]));
        assert!(k.is_sub_brace() && k.is_normal());
        let i = ideal_from_normal(&k).unwrap();
        assert_eq!(i.space, f.linear_kernel());
        let qt = quotient_by_ideal(&i).unwrap();
        assert!(qt.brace.ensure_verified().is_ok());
        assert_eq!(qt.brace.mul_dot(), qt.brace.mul_bullet());
        assert!(verify_morphism(&qt.proj).all_passed());
        let fz = epi_mono_factorize(&f).unwrap();
        assert!(fz.i.is_injective() && fz.p.is_surjective());
        assert_eq!(fz.i.compose(&fz.p).unwrap().mat, f.mat);
        let (kb, incl) = k.to_brace().unwrap();
        assert!(kb.ensure_verified().is_ok());
        assert!(verify_morphism(&incl).all_passed());
    }

    #[test]
    fn kernels_of_identity_and_counit() {
        let b = b4();
        assert_eq!(hkernel(&BraceMorphism::identity(&b)).dim(), 1);
        assert!(hkernel(&BraceMorphism::counit(&b)).space().is_full());
        let id = BraceMorphism::identity(&b);
        assert!(equalizer(&id, &id).unwrap().space().is_full());
        let z = BraceMorphism::zero(&b, &b);
        assert_eq!(equalizer(&id, &z).unwrap().dim(), 1);
    }

    #[test]
    fn closures_in_b4() {
        let b = b4();
        let g = generated_subbrace(&b, &span_e(4, &[2]));
        assert_eq!(g.space(), &span_e(4, &[0, 2]));
        assert_eq!(normal_closure(&b, &span_e(4, &[2])).space(), &span_e(4, &[0, 2]));
        assert_eq!(generated_subbrace(&b, &Subspace::zero(q(), 4)).dim(), 1);
    }

    #[test]
    fn non_normal_subgroup_of_s3() {
        let s3 = Arc::new(linearize(&catalog::trivial_s3(), q()));
        // Index 1 is the transposition (1 2).
        let sub = SubBrace::verified(s3.clone(), span_e(6, &[0, 1])).unwrap();
        let c = normality_conditions(&sub);
        assert_eq!(c, NormalityConditions { closure: false, ideal: false, kernel: false });
        assert!(matches!(ideal_from_normal(&sub), Err(Error::NormalityFailure)));
    }

    #[test]
    fn pullback_of_quotient_maps() {
        let (b, c) = (b4(), c2());
        let f = mod2(&b, &c);
        let pb = pullback(&f, &f).unwrap();
        assert_eq!(pb.sub.dim(), 8);
        assert!(pb.brace.ensure_verified().is_ok());
        assert!(pb.projections_jointly_injective());
        let id = BraceMorphism::identity(&b);
        let m = pb.mediate(&id, &id).unwrap();
        assert!(verify_morphism(&m).all_passed());
        assert_eq!(pb.proj_a.compose(&m).unwrap().mat, id.mat);
    }

    #[test]
    fn combination_names() {
        let f = q();
        let names: Vec<String> = (0..3).map(|i| format!("e{i}")).collect();
        let v = vec![(0, f.one()), (2, f.int(-1))];
        assert_eq!(combination_name(&names, &v), "e0-e2");
        let half = f.ratio(&3.into(), &2.into()).unwrap();
        assert_eq!(combination_name(&names, &vec![(1, half)]), "3/2*e1");
    }
}
