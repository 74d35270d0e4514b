//! Named braces, morphisms and points used as a shared test suite.

use std::sync::Arc;

use crate::brace::{trivial_brace, HopfBrace};
use crate::field::Field;
use crate::hopf::{CoalgebraData, HopfAlgebraData};
use crate::linalg::sparse::unit_vec;
use crate::linalg::LinMap;
use crate::skew::{self, linearize};
use crate::subquot::{BraceMorphism, PointData};

/// `𝔽_p[x_1..x_k]/(x_i^p)` for `p = 2` is `u(𝔤)` of an abelian restricted Lie
/// algebra with zero `p`-map; basis = subsets of generators as bitmasks.
pub fn restricted_abelian_f2(k: usize) -> HopfAlgebraData {
    let f = Field::Prime(2);
    let n = 1usize << k;
    let names = (0..n)
        .map(|m| {
            if m == 0 {
                return "1".to_string();
            }
            let vars = ["x", "y", "z", "w"];
            (0..k).filter(|i| m >> i & 1 == 1).map(|i| vars.get(i).map(|s| s.to_string()).unwrap_or(format!("x{i}"))).collect::<String>()
        })
        .collect();
    let one = f.one();
    // Δ(m) = Σ_{s ⊆ m} s ⊗ (m \ s).
    let comul = (0..n)
        .map(|m| {
            let mut terms = Vec::new();
            let mut s = m;
            loop {
                terms.push((s, m ^ s, one.clone()));
                if s == 0 {
                    break;
                }
                s = (s - 1) & m;
            }
            terms
        })
        .collect();
    let mut counit = vec![f.zero(); n];
    counit[0] = one.clone();
    let coalg = CoalgebraData::new(f, names, comul, counit.clone(), true).expect("well-formed coalgebra");
    let mul = LinMap::from_fn(f, n, n * n, |idx| {
        let (a, b) = (idx / n, idx % n);
        if a & b == 0 {
            unit_vec(f, a | b)
        } else {
            Vec::new()
        }
    });
    HopfAlgebraData::new(coalg, mul, counit, None).expect("has an antipode")
}

/// `𝔽₂[x]/(x²)` with `x` primitive, as a trivial brace.
pub fn dual_numbers_f2() -> HopfBrace {
    trivial_brace(&restricted_abelian_f2(1)).expect("cocommutative")
}

/// `𝔽₂[x,y]/(x²,y²)` with `x, y` primitive, as a trivial brace.
pub fn restricted_f2_plane() -> HopfBrace {
    trivial_brace(&restricted_abelian_f2(2)).expect("cocommutative")
}

/// Every built-in brace: skew brace lifts over `ℚ` and the `𝔽₂` examples.
pub fn braces() -> Vec<(String, Arc<HopfBrace>)> {
    let mut out: Vec<(String, Arc<HopfBrace>)> =
        skew::catalog::catalog().into_iter().map(|(n, s)| (n.to_string(), Arc::new(linearize(&s, Field::Rationals)))).collect();
    out.push(("dual_numbers_f2".into(), Arc::new(dual_numbers_f2())));
    out.push(("restricted_f2_plane".into(), Arc::new(restricted_f2_plane())));
    out
}

pub fn brace(name: &str) -> Option<Arc<HopfBrace>> {
    braces().into_iter().find(|(n, _)| n == name).map(|(_, b)| b)
}

fn lift(s: &skew::SkewBrace) -> Arc<HopfBrace> {
    Arc::new(linearize(s, Field::Rationals))
}

/// The linear extension of a map of basis indices.
pub fn basis_map(dom: &Arc<HopfBrace>, cod: &Arc<HopfBrace>, map: impl Fn(usize) -> usize) -> BraceMorphism {
    let f = dom.field();
    BraceMorphism::new(dom.clone(), cod.clone(), LinMap::from_fn(f, cod.dim(), dom.dim(), |i| unit_vec(f, map(i)))).expect("shapes agree")
}

/// Parity of a permutation in the `S₃` catalog ordering.
pub fn s3_sign(i: usize) -> usize {
    let p = skew::catalog::s3_elements()[i];
    (0..3).flat_map(|x| (x + 1..3).map(move |y| (x, y))).filter(|&(x, y)| p[x] > p[y]).count() % 2
}

/// Named morphisms between catalog lifts (all verified in the test suite).
pub fn morphisms() -> Vec<(String, BraceMorphism)> {
    let c2 = lift(&skew::catalog::trivial_cyclic(2));
    let c3 = lift(&skew::catalog::trivial_cyclic(3));
    let c4 = lift(&skew::catalog::trivial_cyclic(4));
    let klein = lift(&skew::catalog::trivial_klein());
    let s3 = lift(&skew::catalog::trivial_s3());
    let op = lift(&skew::catalog::op_s3());
    let b4 = lift(&skew::catalog::b4());
    vec![
        ("b4_mod2".into(), basis_map(&b4, &c2, |i| i % 2)),
        ("c4_mod2".into(), basis_map(&c4, &c2, |i| i % 2)),
        ("klein_first".into(), basis_map(&klein, &c2, |i| i / 2)),
        ("s3_sign".into(), basis_map(&s3, &c2, s3_sign)),
        ("op_s3_sign".into(), basis_map(&op, &c2, s3_sign)),
        ("c2_into_klein".into(), basis_map(&c2, &klein, |i| 2 * i)),
        ("c2_into_s3".into(), basis_map(&c2, &s3, |i| i)),
        ("c2_into_c4".into(), basis_map(&c2, &c4, |i| 2 * i)),
        ("c3_into_s3".into(), basis_map(&c3, &s3, |i| [0, 3, 4][i])),
        ("b4_identity".into(), BraceMorphism::identity(&b4)),
        ("b4_counit".into(), BraceMorphism::counit(&b4)),
        ("s3_counit".into(), BraceMorphism::counit(&s3)),
        ("c3_zero_to_c2".into(), BraceMorphism::zero(&c3, &c2)),
    ]
}

/// Split epimorphisms: product points and split catalog quotients.
pub fn points() -> Vec<(String, PointData)> {
    let c2 = lift(&skew::catalog::trivial_cyclic(2));
    let c3 = lift(&skew::catalog::trivial_cyclic(3));
    let klein = lift(&skew::catalog::trivial_klein());
    let s3 = lift(&skew::catalog::trivial_s3());
    let op = lift(&skew::catalog::op_s3());
    let b4 = lift(&skew::catalog::b4());
    let split = |a: &Arc<HopfBrace>, pi: fn(usize) -> usize, gamma: fn(usize) -> usize| {
        PointData::new(basis_map(a, &c2, pi), basis_map(&c2, a, gamma)).expect("split point")
    };
    vec![
        ("b4_times_c2".into(), PointData::product(&b4, &c2).expect("product point")),
        ("c3_times_c2".into(), PointData::product(&c3, &c2).expect("product point")),
        ("k_times_b4".into(), PointData::product(&crate::subquot::unit_object(Field::Rationals), &b4).expect("product point")),
        ("b4_over_k".into(), PointData::new(BraceMorphism::counit(&b4), BraceMorphism::unit(&b4)).expect("point")),
        ("klein_first".into(), split(&klein, |i| i / 2, |i| 2 * i)),
        ("s3_sign".into(), split(&s3, s3_sign, |i| i)),
        ("op_s3_sign".into(), split(&op, s3_sign, |i| i)),
    ]
}
