//! Matched pairs of actions and their correspondence with cocommutative braces.

use crate::brace::{tabulate, HopfBrace};
use crate::error::{Error, Result};
use crate::hopf::{compare, verify_hopf_algebra, HopfAlgebraData};
use crate::linalg::sparse::{self, tensor, unit_vec, Acc};
use crate::linalg::{LinMap, SVec};
use crate::report::VerificationReport;

/// `(H•, ⇀, ↼)` with both actions stored as `n × n²` maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    pub hopf_bullet: HopfAlgebraData,
    pub act_left: LinMap,
    pub act_right: LinMap,
}

struct Ops<'a> {
    h: &'a HopfAlgebraData,
    left: &'a LinMap,
    right: &'a LinMap,
}

impl Ops<'_> {
    fn n(&self) -> usize {
        self.h.dim()
    }
    fn e(&self, i: usize) -> SVec {
        unit_vec(self.h.field(), i)
    }
    fn mul(&self, a: &SVec, b: &SVec) -> SVec {
        self.h.mul_vec(a, b)
    }
    fn l(&self, a: &SVec, b: &SVec) -> SVec {
        self.left.apply(&tensor(a, b, self.n()))
    }
    fn r(&self, a: &SVec, b: &SVec) -> SVec {
        self.right.apply(&tensor(a, b, self.n()))
    }
    fn sw(&self, i: usize) -> Vec<(SVec, SVec, crate::field::Scalar)> {
        self.h.coalg.comul_terms(i).into_iter().map(|(j, k, c)| (self.e(j), self.e(k), c)).collect()
    }
    /// `Σ g(a₁, b₁, a₂, b₂)` over `Δa ⊗ Δb`.
    fn sum2(&self, a: usize, b: usize, g: impl Fn(&SVec, &SVec, &SVec, &SVec) -> SVec) -> SVec {
        let mut acc = Acc::new();
        for (a1, a2, ca) in self.sw(a) {
            for (b1, b2, cb) in self.sw(b) {
                acc.add_scaled(&g(&a1, &b1, &a2, &b2), &(&ca * &cb));
            }
        }
        acc.finish()
    }
}

/// The module, module-coalgebra and compatibility laws of a matched pair.
pub fn verify_matched_pair(mp: &MatchedPairData) -> VerificationReport {
    let mut r = VerificationReport::new();
    r.absorb("bullet.", verify_hopf_algebra(&mp.hopf_bullet));
    let o = Ops { h: &mp.hopf_bullet, left: &mp.act_left, right: &mp.act_right };
    let n = o.n();
    let f = o.h.field();
    let one = o.h.unit_svec();
    let id = LinMap::identity(f, n);
    let (left, right) = (o.left, o.right);
    let eps = |i: usize| o.h.coalg.counit()[i].clone();

    compare(&mut r, "left_unit", &tabulate(f, n, n, 1, |t| o.l(&one, &o.e(t[0]))), &id, n, 1);
    let lhs = tabulate(f, n, n, 3, |t| o.l(&o.e(t[0]), &o.l(&o.e(t[1]), &o.e(t[2]))));
    let rhs = tabulate(f, n, n, 3, |t| o.l(&o.mul(&o.e(t[0]), &o.e(t[1])), &o.e(t[2])));
    compare(&mut r, "left_associative", &lhs, &rhs, n, 3);
    let rhs = tabulate(f, n * n, n, 2, |t| o.sum2(t[0], t[1], |a1, b1, a2, b2| tensor(&o.l(a1, b1), &o.l(a2, b2), n)));
    compare(&mut r, "left_comultiplicative", &o.h.coalg.comul().compose(left), &rhs, n, 2);
    let eps2 = LinMap::functional(f, &(0..n * n).map(|i| &eps(i / n) * &eps(i % n)).collect::<Vec<_>>());
    compare(&mut r, "left_counital", &o.h.coalg.counit_map().compose(left), &eps2, n, 2);

    compare(&mut r, "right_unit", &tabulate(f, n, n, 1, |t| o.r(&o.e(t[0]), &one)), &id, n, 1);
    let lhs = tabulate(f, n, n, 3, |t| o.r(&o.r(&o.e(t[0]), &o.e(t[1])), &o.e(t[2])));
    let rhs = tabulate(f, n, n, 3, |t| o.r(&o.e(t[0]), &o.mul(&o.e(t[1]), &o.e(t[2]))));
    compare(&mut r, "right_associative", &lhs, &rhs, n, 3);
    let rhs = tabulate(f, n * n, n, 2, |t| o.sum2(t[0], t[1], |a1, b1, a2, b2| tensor(&o.r(a1, b1), &o.r(a2, b2), n)));
    compare(&mut r, "right_comultiplicative", &o.h.coalg.comul().compose(right), &rhs, n, 2);
    compare(&mut r, "right_counital", &o.h.coalg.counit_map().compose(right), &eps2, n, 2);

    // a⇀(b•c) = (a₁⇀b₁)•((a₂↼b₂)⇀c)
    let lhs = tabulate(f, n, n, 3, |t| o.l(&o.e(t[0]), &o.mul(&o.e(t[1]), &o.e(t[2]))));
    let rhs = tabulate(f, n, n, 3, |t| {
        let c = o.e(t[2]);
        o.sum2(t[0], t[1], |a1, b1, a2, b2| o.mul(&o.l(a1, b1), &o.l(&o.r(a2, b2), &c)))
    });
    compare(&mut r, "left_action_on_product", &lhs, &rhs, n, 3);
    // (a•b)↼c = (a↼(b₁⇀c₁))•(b₂↼c₂)
    let lhs = tabulate(f, n, n, 3, |t| o.r(&o.mul(&o.e(t[0]), &o.e(t[1])), &o.e(t[2])));
    let rhs = tabulate(f, n, n, 3, |t| {
        let a = o.e(t[0]);
        o.sum2(t[1], t[2], |b1, c1, b2, c2| o.mul(&o.r(&a, &o.l(b1, c1)), &o.r(b2, c2)))
    });
    compare(&mut r, "right_action_on_product", &lhs, &rhs, n, 3);
    // a•b = (a₁⇀b₁)•(a₂↼b₂)
    let rhs = tabulate(f, n, n, 2, |t| o.sum2(t[0], t[1], |a1, b1, a2, b2| o.mul(&o.l(a1, b1), &o.r(a2, b2))));
    compare(&mut r, "braided_commutativity", &o.h.mul, &rhs, n, 2);
    r
}

/// The matched pair `(H•, ⇀, ↼)` of a cocommutative brace.
pub fn to_matched_pair(b: &HopfBrace) -> MatchedPairData {
    MatchedPairData { hopf_bullet: b.hopf_bullet(), act_left: b.left_action_map().clone(), act_right: b.right_action_map().clone() }
}

/// Rebuilds `a·b = a₁•(T(a₂)⇀b)` and `S(a) = a₁⇀T(a₂)` from a matched pair.
pub fn from_matched_pair(mp: &MatchedPairData) -> Result<HopfBrace> {
    let report = verify_matched_pair(mp);
    if !report.all_passed() {
        return Err(Error::failed(report));
    }
    let o = Ops { h: &mp.hopf_bullet, left: &mp.act_left, right: &mp.act_right };
    let n = o.n();
    let f = o.h.field();
    let t_map = &mp.hopf_bullet.antipode;
    let dot = tabulate(f, n, n, 2, |t| {
        let mut acc = Acc::new();
        for (a1, a2, c) in o.sw(t[0]) {
            acc.add_scaled(&o.mul(&a1, &o.l(&t_map.apply(&a2), &o.e(t[1]))), &c);
        }
        acc.finish()
    });
    let s = tabulate(f, n, n, 1, |t| {
        let mut acc = Acc::new();
        for (a1, a2, c) in o.sw(t[0]) {
            acc.add_scaled(&o.l(&a1, &t_map.apply(&a2)), &c);
        }
        acc.finish()
    });
    let h = &mp.hopf_bullet;
    let b = HopfBrace::new(h.coalg.clone(), dot, h.mul.clone(), h.unit.clone(), Some(s), Some(t_map.clone()))?;
    b.ensure_verified()?;
    // Cache the given actions only if they agree with the recomputed ones.
    let left = b.left_action_map();
    if *left != mp.act_left || *b.right_action_map() != mp.act_right {
        let mut r = VerificationReport::new();
        r.record("left_action_recovered", left.first_difference(&mp.act_left).map(|c| sparse::split_index(c, n, 2)));
        r.record("right_action_recovered", b.right_action_map().first_difference(&mp.act_right).map(|c| sparse::split_index(c, n, 2)));
        return Err(Error::failed(r));
    }
    Ok(b)
}
