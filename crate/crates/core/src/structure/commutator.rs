//! Huq commutators, central extensions and the abelian and trivial
//! reflections.

use std::sync::Arc;

use crate::brace::HopfBrace;
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, Acc};
use crate::linalg::{LinMap, SVec};
use crate::subquot::morphism::svec_space;
use crate::subquot::{hkernel, ideal_from_normal, image_subbrace, normal_closure, quotient_by_ideal, BraceMorphism, Quotient, SubBrace};

/// The three convolution expressions of a pair `x, y`:
/// `x₁·y₁·S(x₂)·S(y₂)`, `S(x₁)·(x₂•y₁)·S(y₂)`, `x₁•y₁•T(x₂)•T(y₂)`.
fn convolutions(b: &HopfBrace, x: &SVec, y: &SVec) -> [SVec; 3] {
    let mut acc = [Acc::new(), Acc::new(), Acc::new()];
    for (x1, x2, cx) in b.sweedler(x) {
        for (y1, y2, cy) in b.sweedler(y) {
            let c = &cx * &cy;
            let v0 = b.dot(&b.dot(&b.dot(&x1, &y1), &b.s(&x2)), &b.s(&y2));
            let v1 = b.dot(&b.dot(&b.s(&x1), &b.bullet(&x2, &y1)), &b.s(&y2));
            let v2 = b.bullet(&b.bullet(&b.bullet(&x1, &y1), &b.t(&x2)), &b.t(&y2));
            acc[0].add_scaled(&v0, &c);
            acc[1].add_scaled(&v1, &c);
            acc[2].add_scaled(&v2, &c);
        }
    }
    acc.map(Acc::finish)
}

fn same_parent(x: &SubBrace, y: &SubBrace) -> Result<()> {
    if **x.parent() != **y.parent() {
        return Err(Error::CodomainMismatch);
    }
    Ok(())
}

/// Huq commutativity through the convolution identities: all three
/// expressions equal `ε(x)ε(y)1` on basis pairs.
pub fn huq_commute(x: &SubBrace, y: &SubBrace) -> Result<bool> {
    same_parent(x, y)?;
    let b = x.parent();
    let one = b.unit_svec();
    for xv in x.basis() {
        for yv in y.basis() {
            let target = sparse::scale(&one, &(&b.eps(&xv) * &b.eps(&yv)));
            if convolutions(b, &xv, &yv).iter().any(|v| *v != target) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `y·x = x·y = x•y = y•x` on basis pairs.
pub fn commute_directly(x: &SubBrace, y: &SubBrace) -> Result<bool> {
    same_parent(x, y)?;
    let b = x.parent();
    for xv in x.basis() {
        for yv in y.basis() {
            let xy = b.dot(&xv, &yv);
            if b.dot(&yv, &xv) != xy || b.bullet(&xv, &yv) != xy || b.bullet(&yv, &xv) != xy {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All three convolution families over basis pairs of `X × Y`.
pub fn huq_generators(x: &SubBrace, y: &SubBrace) -> Vec<SVec> {
    let b = x.parent();
    let mut out = Vec::new();
    for xv in x.basis() {
        for yv in y.basis() {
            out.extend(convolutions(b, &xv, &yv));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct CommutatorResult {
    pub generators: Vec<SVec>,
    pub commutator: SubBrace,
    pub quotient: Quotient,
}

/// `[X, Y]`, the normal closure of the convolution families, with the
/// quotient in which the images of `X` and `Y` commute.
pub fn huq_commutator(x: &SubBrace, y: &SubBrace) -> Result<CommutatorResult> {
    same_parent(x, y)?;
    if !x.is_normal() || !y.is_normal() {
        return Err(Error::NormalityFailure);
    }
    let b = x.parent();
    let generators = huq_generators(x, y);
    let commutator = normal_closure(b, &svec_space(b.field(), b.dim(), &generators));
    let quotient = quotient_by_ideal(&ideal_from_normal(&commutator)?)?;
    Ok(CommutatorResult { generators, commutator, quotient })
}

impl CommutatorResult {
    /// Whether the images of `x` and `y` commute in the quotient.
    pub fn images_commute(&self, x: &SubBrace, y: &SubBrace) -> Result<bool> {
        let p = &self.quotient.proj;
        huq_commute(&image_of(p, x)?, &image_of(p, y)?)
    }
}

fn image_of(f: &BraceMorphism, x: &SubBrace) -> Result<SubBrace> {
    let (xb, incl) = x.to_brace()?;
    let _ = xb;
    image_subbrace(&f.compose(&incl)?)
}

/// Minimality evidence: if the images of `X` and `Y` under `f` commute, every
/// generator lies in `Hker(f)`. Vacuously true otherwise.
pub fn generators_in_kernel(res: &CommutatorResult, x: &SubBrace, y: &SubBrace, f: &BraceMorphism) -> Result<bool> {
    if !huq_commute(&image_of(f, x)?, &image_of(f, y)?)? {
        return Ok(true);
    }
    let k = hkernel(f);
    Ok(res.generators.iter().all(|g| k.contains(g)))
}

/// `a·k = k·a = k•a = a•k` for `k ∈ Hker(f)` and every basis element `a`.
pub fn is_central_extension(f: &BraceMorphism) -> Result<bool> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let b = &f.dom;
    let k = hkernel(f);
    for a in 0..b.dim() {
        let a = b.e(a);
        for kv in k.basis() {
            let ak = b.dot(&a, &kv);
            if b.dot(&kv, &a) != ak || b.bullet(&kv, &a) != ak || b.bullet(&a, &kv) != ak {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `H / H·[H,H]⁺`.
pub fn abelianization(b: &Arc<HopfBrace>) -> Result<Quotient> {
    let full = SubBrace::full(b);
    Ok(huq_commutator(&full, &full)?.quotient)
}

/// `· = •` and `·` commutative.
pub fn is_abelian_object(b: &HopfBrace) -> bool {
    let n = b.dim();
    let flip = LinMap::flip(b.field(), n, n);
    b.mul_dot() == b.mul_bullet() && b.mul_dot().compose(&flip) == *b.mul_dot()
}

/// `a ⇀ x = ε(a) x`.
pub fn action_is_trivial(b: &HopfBrace) -> bool {
    let f = b.field();
    let id = LinMap::identity(f, b.dim());
    *b.left_action_map() == b.coalg().counit_map().kron(&id)
}

/// `S(x₁)·(x₂•y₁)·S(y₂)` over basis pairs.
pub fn trivialization_generators(b: &HopfBrace) -> Vec<SVec> {
    let mut out = Vec::new();
    for x in 0..b.dim() {
        for y in 0..b.dim() {
            let [_, g, _] = convolutions(b, &b.e(x), &b.e(y));
            out.push(g);
        }
    }
    out
}

/// `H / H·(H*H)⁺`, the universal trivial brace under `H`.
pub fn trivialization(b: &Arc<HopfBrace>) -> Result<Quotient> {
    let gens = trivialization_generators(b);
    let n = normal_closure(b, &svec_space(b.field(), b.dim(), &gens));
    quotient_by_ideal(&ideal_from_normal(&n)?)
}
