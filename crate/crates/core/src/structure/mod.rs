//! Classification of braces: torsion decomposition, post-Lie data on
//! primitives, Huq commutators, central extensions and reflections.

mod commutator;

pub use commutator::{
    abelianization, action_is_trivial, commute_directly, generators_in_kernel, huq_commutator, huq_commute, huq_generators, is_abelian_object,
    is_central_extension, trivialization, trivialization_generators, CommutatorResult,
};

use std::sync::Arc;

use crate::brace::HopfBrace;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{group_likes, irreducible_components, primitives};
use crate::linalg::sparse::{self, from_dense, to_dense, Acc};
use crate::linalg::{LinMap, Mat, SVec, Subspace};
use crate::report::{first_failure, VerificationReport};
use crate::subquot::{generated_subbrace, hkernel, verify_morphism, BraceMorphism, SubBrace};

/// Span of the group-like elements, which form a sub-brace.
pub fn grouplike_subbrace(b: &Arc<HopfBrace>) -> Result<SubBrace> {
    let g = group_likes(&b.hopf_dot());
    debug_assert_eq!(g, group_likes(&b.hopf_bullet()));
    SubBrace::verified(b.clone(), Subspace::span(b.field(), b.dim(), &g))
}

/// `H¹ ↪ H ↠ kG(H)` for a pointed brace in characteristic zero.
#[derive(Clone, Debug)]
pub struct TorsionDecomposition {
    /// The irreducible component of the unit.
    pub torsion: SubBrace,
    pub grouplikes: SubBrace,
    /// `kG(H)` in the echelon basis of the group-like span.
    pub free: Arc<HopfBrace>,
    /// `π = ⊕ π_g` with `π_g(h) = ε(h) g` on `H^g`.
    pub projection: BraceMorphism,
    pub section: BraceMorphism,
    /// `Hker(π) = H¹`.
    pub exact: bool,
}

pub fn torsion_sequence(b: &Arc<HopfBrace>) -> Result<TorsionDecomposition> {
    let f = b.field();
    if f.characteristic() != 0 {
        return Err(Error::CharPositive);
    }
    let n = b.dim();
    let comps = irreducible_components(&b.hopf_dot())?;
    let grouplikes = grouplike_subbrace(b)?;
    let (free, section) = grouplikes.to_brace()?;
    // Split every basis vector along the direct sum of components.
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    let mut owner = Vec::new();
    for (ci, c) in comps.iter().enumerate() {
        for v in c.space.vectors() {
            cols.push(v);
            owner.push(ci);
        }
    }
    let p = Mat::from_columns(f, n, &cols).inverse().expect("components span H");
    let piv = grouplikes.space().pivots().to_vec();
    let free_coords = |g: &[Scalar]| from_dense(&piv.iter().map(|&c| g[c].clone()).collect::<Vec<_>>());
    let eps = b.coalg().counit();
    let pi = LinMap::from_fn(f, free.dim(), n, |i| {
        let mut acc = Acc::new();
        for (ci, c) in comps.iter().enumerate() {
            // ε of the H^g-part of e_i.
            let mut e = f.zero();
            for (k, &o) in owner.iter().enumerate() {
                if o == ci {
                    let coef = p.get(k, i);
                    for (r, x) in cols[k].iter().enumerate() {
                        e.add_assign_ref(&(&(coef * x) * &eps[r]));
                    }
                }
            }
            acc.add_scaled(&free_coords(&c.grouplike), &e);
        }
        acc.finish()
    });
    let projection = BraceMorphism::new(b.clone(), free.clone(), pi)?;
    let r = verify_morphism(&projection);
    if !r.all_passed() {
        return Err(Error::failed(r));
    }
    let one = b.unit();
    let unit_comp = comps.iter().find(|c| c.grouplike == one).expect("the unit is group-like");
    let torsion = SubBrace::verified(b.clone(), unit_comp.space.clone())?;
    let exact = hkernel(&projection).space() == torsion.space();
    Ok(TorsionDecomposition { torsion, grouplikes, free, projection, section, exact })
}

/// Group-like elements span `H`.
pub fn is_skb_object(b: &Arc<HopfBrace>) -> bool {
    Subspace::span(b.field(), b.dim(), &group_likes(&b.hopf_dot())).is_full()
}

/// Primitive elements generate `H` as a brace.
pub fn is_primitive_brace(b: &Arc<HopfBrace>) -> bool {
    generated_subbrace(b, &primitives(&b.hopf_dot())).space().is_full()
}

/// `· = •`.
pub fn is_trivial_brace(b: &HopfBrace) -> bool {
    b.mul_dot() == b.mul_bullet()
}

fn vectors(s: &Subspace) -> Vec<SVec> {
    s.vectors().iter().map(|v| from_dense(v)).collect()
}

/// `g•(h·k) = (g•h)·S(g)·(g•k)` on triples of group-likes.
pub fn skb_compat_check(b: &HopfBrace) -> VerificationReport {
    let g: Vec<SVec> = group_likes(&b.hopf_dot()).iter().map(|v| from_dense(v)).collect();
    let mut r = VerificationReport::new();
    let w = first_failure(g.len(), 3, |t| {
        let (x, y, z) = (&g[t[0]], &g[t[1]], &g[t[2]]);
        b.bullet(x, &b.dot(y, z)) == b.dot(&b.dot(&b.bullet(x, y), &b.s(x)), &b.bullet(x, z))
    });
    r.record("grouplike_compatibility", w);
    r
}

/// `x•(y·z) = (x•y)·z − y·x·z + y·(x•z)` on triples of primitives.
pub fn phbr_compat_check(b: &HopfBrace) -> VerificationReport {
    let p = vectors(&primitives(&b.hopf_dot()));
    let mut r = VerificationReport::new();
    let w = first_failure(p.len(), 3, |t| {
        let (x, y, z) = (&p[t[0]], &p[t[1]], &p[t[2]]);
        let rhs = sparse::add(&sparse::sub(&b.dot(&b.bullet(x, y), z), &b.dot(&b.dot(y, x), z)), &b.dot(y, &b.bullet(x, z)));
        b.bullet(x, &b.dot(y, z)) == rhs
    });
    r.record("primitive_compatibility", w);
    r
}

/// `(P(H), [·,·]_·, ⇀)` in the echelon basis of `P(H)`; maps are `d × d²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostLieData {
    pub primitive_basis: Vec<SVec>,
    pub bracket_dot: LinMap,
    pub bracket_bullet: LinMap,
    pub action: LinMap,
    pub report: VerificationReport,
}

/// Brackets and action on the primitives, with the Lie, post-Lie and
/// subadjacent identities checked.
pub fn post_lie_data(b: &HopfBrace) -> Result<PostLieData> {
    let f = b.field();
    let space = primitives(&b.hopf_dot());
    let basis = vectors(&space);
    let d = basis.len();
    let piv = space.pivots().to_vec();
    let coords = |v: &SVec| -> Option<SVec> {
        let dense = to_dense(v, f, b.dim());
        space.contains(&dense).ok()?.then(|| from_dense(&piv.iter().map(|&c| dense[c].clone()).collect::<Vec<_>>()))
    };
    let mut action_cols = Vec::with_capacity(d * d);
    for x in &basis {
        for y in &basis {
            action_cols.push(coords(&b.left(x, y)).ok_or(Error::ActionNotRestricting)?);
        }
    }
    let action = LinMap::from_columns(f, d, action_cols);
    let bracket = |mul: &dyn Fn(&SVec, &SVec) -> SVec| -> Result<LinMap> {
        let mut cols = Vec::with_capacity(d * d);
        for x in &basis {
            for y in &basis {
                let v = sparse::sub(&mul(x, y), &mul(y, x));
                // Commutators of primitives are primitive.
                cols.push(coords(&v).ok_or(Error::ActionNotRestricting)?);
            }
        }
        Ok(LinMap::from_columns(f, d, cols))
    };
    let bracket_dot = bracket(&|x, y| b.dot(x, y))?;
    let bracket_bullet = bracket(&|x, y| b.bullet(x, y))?;
    let report = post_lie_report(f, d, &bracket_dot, &bracket_bullet, &action);
    Ok(PostLieData { primitive_basis: basis, bracket_dot, bracket_bullet, action, report })
}

fn post_lie_report(f: crate::field::Field, d: usize, br: &LinMap, brb: &LinMap, act: &LinMap) -> VerificationReport {
    let e = |i: usize| sparse::unit_vec(f, i);
    let op = |m: &LinMap, x: &SVec, y: &SVec| m.apply(&sparse::tensor(x, y, d));
    let mut r = VerificationReport::new();
    for (name, m) in [("dot", br), ("bullet", brb)] {
        r.record(format!("{name}.alternating"), first_failure(d, 1, |t| op(m, &e(t[0]), &e(t[0])).is_empty()));
        r.record(
            format!("{name}.jacobi"),
            first_failure(d, 3, |t| {
                let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
                let s = sparse::add(&sparse::add(&op(m, &x, &op(m, &y, &z)), &op(m, &y, &op(m, &z, &x))), &op(m, &z, &op(m, &x, &y)));
                s.is_empty()
            }),
        );
    }
    // x⇀[y,z] = [x⇀y,z] + [y,x⇀z]
    r.record(
        "post_lie_derivation",
        first_failure(d, 3, |t| {
            let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
            op(act, &x, &op(br, &y, &z)) == sparse::add(&op(br, &op(act, &x, &y), &z), &op(br, &y, &op(act, &x, &z)))
        }),
    );
    // ([x,y] + x⇀y − y⇀x)⇀z = x⇀(y⇀z) − y⇀(x⇀z)
    r.record(
        "post_lie_flatness",
        first_failure(d, 3, |t| {
            let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
            let sub = sparse::sub(&sparse::add(&op(br, &x, &y), &op(act, &x, &y)), &op(act, &y, &x));
            op(act, &sub, &z) == sparse::sub(&op(act, &x, &op(act, &y, &z)), &op(act, &y, &op(act, &x, &z)))
        }),
    );
    // [x,y]• = [x,y]· + x⇀y − y⇀x
    r.record(
        "subadjacent",
        first_failure(d, 2, |t| {
            let (x, y) = (e(t[0]), e(t[1]));
            op(brb, &x, &y) == sparse::sub(&sparse::add(&op(br, &x, &y), &op(act, &x, &y)), &op(act, &y, &x))
        }),
    );
    r
}

/// A morphism out of a primitive brace into a group-like one must be zero.
/// Vacuously true when the classes do not apply.
pub fn separation_check(f: &BraceMorphism) -> bool {
    if is_primitive_brace(&f.dom) && is_skb_object(&f.cod) {
        f.is_zero_morphism()
    } else {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::skew::{catalog, linearize};

    #[test]
    fn b4_torsion() {
        let b = Arc::new(linearize(&catalog::b4(), Field::Rationals));
        let t = torsion_sequence(&b).unwrap();
        assert_eq!(t.torsion.dim(), 1);
        assert_eq!(t.free.dim(), 4);
        assert!(t.exact);
        assert!(t.projection.mat.compose(&t.section.mat).is_identity());
        assert!(is_skb_object(&b) && !is_primitive_brace(&b) && !is_trivial_brace(&b));
        assert!(skb_compat_check(&b).all_passed());
    }

    #[test]
    fn char_positive_rejected() {
        let b = Arc::new(linearize(&catalog::b4(), Field::prime(3).unwrap()));
        assert!(matches!(torsion_sequence(&b), Err(Error::CharPositive)));
    }
}
