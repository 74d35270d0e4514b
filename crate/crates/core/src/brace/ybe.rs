//! The braided-commutativity operator `c(a⊗b) = (a₁⇀b₁) ⊗ (a₂↼b₂)`.

use crate::brace::{tabulate, HopfBrace};
use crate::hopf::{compare, CoalgebraData};
use crate::linalg::sparse::{tensor, unit_vec, Acc};
use crate::linalg::LinMap;
use crate::report::VerificationReport;

/// An operator on `H ⊗ H` together with the coalgebra `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YBEOperator {
    pub coalg: CoalgebraData,
    pub mat: LinMap,
}

impl YBEOperator {
    pub fn identity(coalg: &CoalgebraData) -> Self {
        let n = coalg.dim();
        YBEOperator { coalg: coalg.clone(), mat: LinMap::identity(coalg.field(), n * n) }
    }
}

pub fn ybe_operator(b: &HopfBrace) -> YBEOperator {
    let n = b.dim();
    let f = b.field();
    let mat = tabulate(f, n * n, n, 2, |t| {
        let mut acc = Acc::new();
        for (a1, a2, ca) in b.sweedler(&unit_vec(f, t[0])) {
            for (b1, b2, cb) in b.sweedler(&unit_vec(f, t[1])) {
                acc.add_scaled(&tensor(&b.left(&a1, &b1), &b.right(&a2, &b2), n), &(&ca * &cb));
            }
        }
        acc.finish()
    });
    YBEOperator { coalg: b.coalg().clone(), mat }
}

/// Braid equation on `H^{⊗3}`, invertibility, and compatibility with the
/// tensor coalgebra structure of `H ⊗ H`.
pub fn braid_report(c: &YBEOperator) -> VerificationReport {
    let mut r = VerificationReport::new();
    let n = c.coalg.dim();
    let f = c.coalg.field();
    let id = LinMap::identity(f, n);
    let c1 = |v: &Vec<_>| c.mat.kron_apply(&id, v);
    let c2 = |v: &Vec<_>| id.kron_apply(&c.mat, v);
    let lhs = tabulate(f, n * n * n, n, 3, |t| {
        let v = unit_vec(f, (t[0] * n + t[1]) * n + t[2]);
        c1(&c2(&c1(&v)))
    });
    let rhs = tabulate(f, n * n * n, n, 3, |t| {
        let v = unit_vec(f, (t[0] * n + t[1]) * n + t[2]);
        c2(&c1(&c2(&v)))
    });
    compare(&mut r, "braid_equation", &lhs, &rhs, n, 3);
    let invertible = c.mat.inverse().is_some();
    r.record("invertible", if invertible { None } else { Some(vec![]) });
    let hh = c.coalg.tensor(&c.coalg);
    r.absorb("coalgebra_map.", hh.map_report(&hh, &c.mat));
    r
}

pub fn braid_check(c: &YBEOperator) -> bool {
    braid_report(c).all_passed()
}
