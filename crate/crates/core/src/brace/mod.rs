//! Hopf braces: two Hopf algebra structures on one cocommutative coalgebra.

mod matched;
mod ybe;

pub use matched::{from_matched_pair, to_matched_pair, verify_matched_pair, MatchedPairData};
pub use ybe::{braid_check, braid_report, ybe_operator, YBEOperator};

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{compare, verify_hopf_algebra, CoalgebraData, HopfAlgebraData};
use crate::linalg::sparse::{self, tensor, unit_vec, Acc};
use crate::linalg::{LinMap, SVec};
use crate::report::VerificationReport;

/// `(H, ·, •, 1, Δ, ε, S, T)`, with both products stored as `n × n²` maps.
///
/// The unit and the coalgebra are shared by construction. The action maps
/// `⇀` and `↼` are computed on first use and cached.
pub struct HopfBrace {
    coalg: CoalgebraData,
    dot: LinMap,
    bullet: LinMap,
    unit: Vec<Scalar>,
    s: LinMap,
    t: LinMap,
    left: OnceLock<LinMap>,
    right: OnceLock<LinMap>,
}

impl Clone for HopfBrace {
    fn clone(&self) -> Self {
        HopfBrace {
            coalg: self.coalg.clone(),
            dot: self.dot.clone(),
            bullet: self.bullet.clone(),
            unit: self.unit.clone(),
            s: self.s.clone(),
            t: self.t.clone(),
            left: self.left.clone(),
            right: self.right.clone(),
        }
    }
}

impl PartialEq for HopfBrace {
    fn eq(&self, other: &Self) -> bool {
        self.coalg == other.coalg
            && self.dot == other.dot
            && self.bullet == other.bullet
            && self.unit == other.unit
            && self.s == other.s
            && self.t == other.t
    }
}

impl Eq for HopfBrace {}

impl fmt::Debug for HopfBrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfBrace").field("field", &self.field()).field("basis", &self.coalg.basis_names()).finish_non_exhaustive()
    }
}

impl HopfBrace {
    /// Assembles a brace, computing (or cross-checking) both antipodes.
    /// Compatibility is not checked; see [`verify_hopf_brace`].
    pub fn new(coalg: CoalgebraData, dot: LinMap, bullet: LinMap, unit: Vec<Scalar>, s: Option<LinMap>, t: Option<LinMap>) -> Result<Self> {
        let hd = HopfAlgebraData::new(coalg.clone(), dot, unit.clone(), s)?;
        let hb = HopfAlgebraData::new(coalg, bullet, unit, t)?;
        Ok(Self::from_hopf_pair(hd, hb))
    }

    /// Like [`HopfBrace::new`], failing unless every brace axiom holds.
    pub fn verified(coalg: CoalgebraData, dot: LinMap, bullet: LinMap, unit: Vec<Scalar>, s: Option<LinMap>, t: Option<LinMap>) -> Result<Self> {
        let b = Self::new(coalg, dot, bullet, unit, s, t)?;
        b.ensure_verified()?;
        Ok(b)
    }

    /// Pairs two Hopf algebras on the same coalgebra and unit.
    pub fn from_hopf_pair(dot: HopfAlgebraData, bullet: HopfAlgebraData) -> Self {
        assert_eq!(dot.coalg, bullet.coalg, "Hopf brace structures must share the coalgebra");
        assert_eq!(dot.unit, bullet.unit, "Hopf brace structures must share the unit");
        HopfBrace {
            coalg: dot.coalg,
            dot: dot.mul,
            bullet: bullet.mul,
            unit: dot.unit,
            s: dot.antipode,
            t: bullet.antipode,
            left: OnceLock::new(),
            right: OnceLock::new(),
        }
    }

    pub(crate) fn from_raw(coalg: CoalgebraData, dot: LinMap, bullet: LinMap, unit: Vec<Scalar>, s: LinMap, t: LinMap) -> Self {
        HopfBrace { coalg, dot, bullet, unit, s, t, left: OnceLock::new(), right: OnceLock::new() }
    }

    pub fn ensure_verified(&self) -> Result<()> {
        let r = verify_hopf_brace(self);
        if r.all_passed() {
            Ok(())
        } else {
            Err(Error::failed(r))
        }
    }

    pub fn field(&self) -> Field {
        self.coalg.field()
    }

    pub fn dim(&self) -> usize {
        self.coalg.dim()
    }

    pub fn coalg(&self) -> &CoalgebraData {
        &self.coalg
    }

    pub fn basis_names(&self) -> &[String] {
        self.coalg.basis_names()
    }

    pub fn mul_dot(&self) -> &LinMap {
        &self.dot
    }

    pub fn mul_bullet(&self) -> &LinMap {
        &self.bullet
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn unit_svec(&self) -> SVec {
        sparse::from_dense(&self.unit)
    }

    pub fn antipode_dot(&self) -> &LinMap {
        &self.s
    }

    pub fn antipode_bullet(&self) -> &LinMap {
        &self.t
    }

    pub fn hopf_dot(&self) -> HopfAlgebraData {
        HopfAlgebraData::from_parts(self.coalg.clone(), self.dot.clone(), self.unit.clone(), self.s.clone())
    }

    pub fn hopf_bullet(&self) -> HopfAlgebraData {
        HopfAlgebraData::from_parts(self.coalg.clone(), self.bullet.clone(), self.unit.clone(), self.t.clone())
    }

    /// Basis vector `e_i`.
    pub fn e(&self, i: usize) -> SVec {
        unit_vec(self.field(), i)
    }

    pub fn dot(&self, a: &SVec, b: &SVec) -> SVec {
        self.dot.apply(&tensor(a, b, self.dim()))
    }

    pub fn bullet(&self, a: &SVec, b: &SVec) -> SVec {
        self.bullet.apply(&tensor(a, b, self.dim()))
    }

    pub fn s(&self, a: &SVec) -> SVec {
        self.s.apply(a)
    }

    pub fn t(&self, a: &SVec) -> SVec {
        self.t.apply(a)
    }

    pub fn delta(&self, a: &SVec) -> SVec {
        self.coalg.delta(a)
    }

    pub fn eps(&self, a: &SVec) -> Scalar {
        self.coalg.eps(a)
    }

    /// `a ⇀ b = S(a₁)·(a₂•b)` as an `n × n²` map.
    pub fn left_action_map(&self) -> &LinMap {
        self.left.get_or_init(|| {
            let n = self.dim();
            LinMap::from_fn(self.field(), n, n * n, |idx| {
                let (a, b) = (idx / n, idx % n);
                let eb = self.e(b);
                let mut acc = Acc::new();
                for (i, j, c) in self.coalg.comul_terms(a) {
                    acc.add_scaled(&self.dot(self.s.col(i), &self.bullet(&self.e(j), &eb)), &c);
                }
                acc.finish()
            })
        })
    }

    /// `a ↼ b = T(a₁⇀b₁)•a₂•b₂` as an `n × n²` map.
    pub fn right_action_map(&self) -> &LinMap {
        self.right.get_or_init(|| {
            let n = self.dim();
            LinMap::from_fn(self.field(), n, n * n, |idx| {
                let (a, b) = (idx / n, idx % n);
                let mut acc = Acc::new();
                for (i, j, ca) in self.coalg.comul_terms(a) {
                    for (k, l, cb) in self.coalg.comul_terms(b) {
                        let t = self.t(&self.left(&self.e(i), &self.e(k)));
                        acc.add_scaled(&self.bullet(&self.bullet(&t, &self.e(j)), &self.e(l)), &(&ca * &cb));
                    }
                }
                acc.finish()
            })
        })
    }

    pub fn left(&self, a: &SVec, x: &SVec) -> SVec {
        self.left_action_map().apply(&tensor(a, x, self.dim()))
    }

    pub fn right(&self, a: &SVec, x: &SVec) -> SVec {
        self.right_action_map().apply(&tensor(a, x, self.dim()))
    }

    /// Iterates a sum over `Δ(a) = Σ c a₁ ⊗ a₂` for a general vector `a`.
    pub fn sweedler(&self, a: &SVec) -> Vec<(SVec, SVec, Scalar)> {
        let n = self.dim();
        let f = self.field();
        self.delta(a).into_iter().map(|(idx, c)| (unit_vec(f, idx / n), unit_vec(f, idx % n), c)).collect()
    }
}

/// `a ⇀ x`.
pub fn left_action(b: &HopfBrace, a: &SVec, x: &SVec) -> SVec {
    b.left(a, x)
}

/// `a ↼ x`.
pub fn right_action(b: &HopfBrace, a: &SVec, x: &SVec) -> SVec {
    b.right(a, x)
}

/// Builds an `n^arity`-column map by evaluating `f` on basis tuples.
pub(crate) fn tabulate(field: Field, rows: usize, n: usize, arity: usize, mut f: impl FnMut(&[usize]) -> SVec) -> LinMap {
    let cols = n.pow(arity as u32);
    LinMap::from_fn(field, rows, cols, |idx| f(&sparse::split_index(idx, n, arity)))
}

/// Both Hopf algebra axiom sets, cocommutativity and the compatibility
/// `a•(b·c) = (a₁•b)·S(a₂)·(a₃•c)` on every basis triple.
pub fn verify_hopf_brace(b: &HopfBrace) -> VerificationReport {
    let mut r = VerificationReport::new();
    r.absorb("dot.", verify_hopf_algebra(&b.hopf_dot()));
    r.absorb("bullet.", verify_hopf_algebra(&b.hopf_bullet()));
    let n = b.dim();
    let f = b.field();
    compare(&mut r, "cocommutativity", &LinMap::flip(f, n, n).compose(b.coalg.comul()), b.coalg.comul(), n, 1);
    let id = LinMap::identity(f, n);
    let lhs = b.bullet.compose(&id.kron(&b.dot));
    let delta2 = b.coalg.comul2();
    let rhs = tabulate(f, n, n, 3, |t| {
        let (eb, ec) = (b.e(t[1]), b.e(t[2]));
        let mut acc = Acc::new();
        for (idx, c) in delta2.col(t[0]) {
            let d = sparse::split_index(*idx, n, 3);
            let left = b.dot(&b.bullet(&b.e(d[0]), &eb), b.s.col(d[1]));
            acc.add_scaled(&b.dot(&left, &b.bullet(&b.e(d[2]), &ec)), c);
        }
        acc.finish()
    });
    compare(&mut r, "compatibility", &lhs, &rhs, n, 3);
    r
}

/// Identities relating the products, antipodes and actions; all hold in
/// every cocommutative Hopf brace.
pub fn brace_identities(b: &HopfBrace) -> VerificationReport {
    let mut r = VerificationReport::new();
    let n = b.dim();
    let f = b.field();
    let one = b.unit_svec();
    let sum = |a: usize, g: &dyn Fn(&SVec, &SVec) -> SVec| {
        let mut acc = Acc::new();
        for (a1, a2, c) in b.sweedler(&b.e(a)) {
            acc.add_scaled(&g(&a1, &a2), &c);
        }
        acc.finish()
    };
    let id = LinMap::identity(f, n);
    let bullet_via = tabulate(f, n, n, 2, |t| sum(t[0], &|a1, a2| b.dot(a1, &b.left(a2, &b.e(t[1])))));
    compare(&mut r, "bullet_via_action", &bullet_via, &b.bullet, n, 2);
    let dot_via = tabulate(f, n, n, 2, |t| sum(t[0], &|a1, a2| b.bullet(a1, &b.left(&b.t(a2), &b.e(t[1])))));
    compare(&mut r, "dot_via_action", &dot_via, &b.dot, n, 2);
    let s_via = tabulate(f, n, n, 1, |t| sum(t[0], &|a1, a2| b.left(a1, &b.t(a2))));
    compare(&mut r, "antipode_via_action", &s_via, &b.s, n, 1);
    let lhs = b.s.compose(b.left_action_map());
    let rhs = b.left_action_map().compose(&id.kron(&b.s));
    compare(&mut r, "antipode_commutes_with_action", &lhs, &rhs, n, 2);
    let act_one = tabulate(f, n, n, 1, |t| b.left(&b.e(t[0]), &one));
    let eps_one = tabulate(f, n, n, 1, |t| sparse::scale(&one, &b.coalg.counit()[t[0]]));
    compare(&mut r, "action_on_unit", &act_one, &eps_one, n, 1);
    let unit_act = tabulate(f, n, n, 1, |t| b.left(&one, &b.e(t[0])));
    compare(&mut r, "unit_acts_trivially", &unit_act, &id, n, 1);
    let mult = tabulate(f, n, n, 3, |t| b.left(&b.e(t[0]), &b.dot(&b.e(t[1]), &b.e(t[2]))));
    let mult_rhs = tabulate(f, n, n, 3, |t| sum(t[0], &|a1, a2| b.dot(&b.left(a1, &b.e(t[1])), &b.left(a2, &b.e(t[2])))));
    compare(&mut r, "action_multiplicative", &mult, &mult_rhs, n, 3);
    let right_one = tabulate(f, n, n, 1, |t| b.right(&b.e(t[0]), &one));
    compare(&mut r, "right_action_by_unit", &right_one, &id, n, 1);
    let one_right = tabulate(f, n, n, 1, |t| b.right(&one, &b.e(t[0])));
    compare(&mut r, "unit_right_action", &one_right, &eps_one, n, 1);
    r
}

/// `a•b = a₁·(a₂⇀b)` for the cached action.
pub fn cocycle_check(b: &HopfBrace) -> bool {
    cocycle_check_with(b, b.left_action_map())
}

/// `a•b = a₁·(a₂⇀b)` for an arbitrary action tensor.
pub fn cocycle_check_with(b: &HopfBrace, action: &LinMap) -> bool {
    let n = b.dim();
    let rhs = tabulate(b.field(), n, n, 2, |t| {
        let mut acc = Acc::new();
        for (a1, a2, c) in b.sweedler(&b.e(t[0])) {
            acc.add_scaled(&b.dot(&a1, &action.apply(&tensor(&a2, &b.e(t[1]), n))), &c);
        }
        acc.finish()
    });
    rhs == b.bullet
}

/// The brace with `• = ·` on a cocommutative Hopf algebra.
pub fn trivial_brace(h: &HopfAlgebraData) -> Result<HopfBrace> {
    if !h.coalg.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    Ok(HopfBrace::from_hopf_pair(h.clone(), h.clone()))
}

/// Tensor product of braces: products `(m ⊗ m')(id ⊗ τ ⊗ id)`, coalgebra
/// `(id ⊗ τ ⊗ id)(Δ ⊗ Δ')`, antipodes `S ⊗ S'` and `T ⊗ T'`.
pub fn tensor_product(a: &HopfBrace, b: &HopfBrace) -> Result<HopfBrace> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field(), b.field()));
    }
    let (na, nb) = (a.dim(), b.dim());
    let big = na * nb;
    let f = a.field();
    let prod = |m: &LinMap, m2: &LinMap| {
        LinMap::from_fn(f, big, big * big, |idx| {
            let (x, y) = (idx / big, idx % big);
            let (a1, b1, a2, b2) = (x / nb, x % nb, y / nb, y % nb);
            tensor(m.col(a1 * na + a2), m2.col(b1 * nb + b2), nb)
        })
    };
    let unit = a.unit.iter().flat_map(|x| b.unit.iter().map(move |y| x * y)).collect();
    Ok(HopfBrace::from_raw(
        a.coalg.tensor(&b.coalg),
        prod(&a.dot, &b.dot),
        prod(&a.bullet, &b.bullet),
        unit,
        a.s.kron(&b.s),
        a.t.kron(&b.t),
    ))
}
