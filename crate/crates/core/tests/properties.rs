use std::sync::Arc;

use hopfbrace::brace::{braid_check, verify_hopf_brace, ybe_operator, HopfBrace};
use hopfbrace::catalog;
use hopfbrace::format::{self, BraceFile, SkewBraceFile, SubspaceFile};
use hopfbrace::linalg::{sparse, Subspace};
use hopfbrace::skew::{linearize, set_solution, verify_skew_brace, SkewBrace};
use hopfbrace::structure::{abelianization, huq_commutator, is_abelian_object};
use hopfbrace::subquot::{
    generated_subbrace, hkernel, normal_closure, normality_conditions, verify_morphism, BraceMorphism, SubBrace,
};
use hopfbrace::{Field, Scalar};
use num_bigint::BigInt;
use proptest::prelude::*;

fn braces() -> Vec<(String, Arc<HopfBrace>)> {
    catalog::braces()
}

fn pick_brace() -> impl Strategy<Value = Arc<HopfBrace>> {
    let all = braces();
    (0..all.len()).prop_map(move |i| all[i].1.clone())
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::Prime(2)), Just(Field::Prime(3)), Just(Field::Prime(7)), Just(Field::Prime(101))]
}

fn scalar(f: Field) -> impl Strategy<Value = Scalar> {
    (-20i64..20, 1i64..9).prop_map(move |(n, d)| f.ratio(&BigInt::from(n), &BigInt::from(d)).unwrap_or_else(|_| f.int(n)))
}

fn vectors(f: Field, ambient: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    proptest::collection::vec(proptest::collection::vec(scalar(f), ambient), 0..=count)
}

/// A brace together with a random seed subspace of it.
fn brace_and_seed() -> impl Strategy<Value = (Arc<HopfBrace>, Subspace)> {
    pick_brace().prop_flat_map(|b| {
        let (f, n) = (b.field(), b.dim());
        vectors(f, n, 2).prop_map(move |vs| (b.clone(), Subspace::span(f, n, &vs)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(f in field(), seed in any::<[i8; 6]>()) {
        let s: Vec<Scalar> = seed.iter().map(|&x| f.int(x as i64)).collect();
        let (a, b, c) = (&s[0], &s[1], &s[2]);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a - b) + b, a.clone());
        if let Some(inv) = a.inverse() {
            prop_assert!((a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn subspace_lattice((u, v, n) in (2usize..6).prop_flat_map(|n| (vectors(Field::Rationals, n, 4), vectors(Field::Rationals, n, 4), Just(n)))) {
        let q = Field::Rationals;
        let (su, sv) = (Subspace::span(q, n, &u), Subspace::span(q, n, &v));
        prop_assert!(su.dim() <= u.len());
        for x in &u {
            prop_assert!(su.contains(x).unwrap());
        }
        let meet = su.intersect(&sv).unwrap();
        let join = su.sum(&sv).unwrap();
        prop_assert!(meet.is_subspace_of(&su).unwrap() && meet.is_subspace_of(&sv).unwrap());
        prop_assert_eq!(meet.dim() + join.dim(), su.dim() + sv.dim());
        for x in su.vectors() {
            let c = su.coordinates(&x).unwrap();
            prop_assert_eq!(su.combine(&c), x);
        }
    }

    #[test]
    fn generated_subbrace_is_smallest((b, seed) in brace_and_seed()) {
        let g = generated_subbrace(&b, &seed);
        prop_assert!(g.is_sub_brace());
        prop_assert!(seed.is_subspace_of(g.space()).unwrap());
        let again = generated_subbrace(&b, g.space());
        prop_assert_eq!(again.space(), g.space());
        let n = normal_closure(&b, &seed);
        prop_assert!(n.is_normal());
        prop_assert!(g.space().is_subspace_of(n.space()).unwrap());
        let again = normal_closure(&b, n.space());
        prop_assert_eq!(again.space(), n.space());
    }

    #[test]
    fn normality_conditions_agree((b, seed) in brace_and_seed()) {
        let g = generated_subbrace(&b, &seed);
        let c = normality_conditions(&g);
        prop_assert!(c.agree(), "{:?}", c);
        prop_assert_eq!(c.closure, g.is_normal());
        let n = normal_closure(&b, &seed);
        prop_assert_eq!(normality_conditions(&n), hopfbrace::subquot::NormalityConditions { closure: true, ideal: true, kernel: true });
    }

    #[test]
    fn huq_commutator_symmetric_and_bounded((b, x, y) in brace_and_seed().prop_flat_map(|(b, x)| {
        let (f, n) = (b.field(), b.dim());
        vectors(f, n, 2).prop_map(move |vs| (b.clone(), x.clone(), Subspace::span(f, n, &vs)))
    })) {
        let (x, y) = (normal_closure(&b, &x), normal_closure(&b, &y));
        let xy = huq_commutator(&x, &y).unwrap();
        let yx = huq_commutator(&y, &x).unwrap();
        prop_assert_eq!(xy.commutator.space(), yx.commutator.space());
        let meet = x.space().intersect(y.space()).unwrap();
        prop_assert!(xy.commutator.space().is_subspace_of(&meet).unwrap());
        prop_assert!(xy.images_commute(&x, &y).unwrap());
    }

    #[test]
    fn abelianization_is_idempotent(b in pick_brace()) {
        let q = abelianization(&b).unwrap();
        prop_assert!(is_abelian_object(&q.brace));
        prop_assert!(verify_morphism(&q.proj).all_passed());
        let again = abelianization(&q.brace).unwrap();
        prop_assert_eq!(again.brace.dim(), q.brace.dim());
        prop_assert!(again.proj.is_iso());
    }

    #[test]
    fn kernels_of_morphisms_are_normal(i in 0usize..13) {
        let (_, f) = &catalog::morphisms()[i];
        let k = hkernel(f);
        prop_assert!(k.is_sub_brace() && k.is_normal());
        // Hker(f) lies inside the linear kernel of f − uε.
        let ue = BraceMorphism::zero(&f.dom, &f.cod);
        let diff = f.mat.sub(&ue.mat);
        for v in k.space().vectors() {
            prop_assert!(diff.apply(&sparse::from_dense(&v)).is_empty());
        }
    }

    #[test]
    fn brace_files_round_trip(b in pick_brace()) {
        let text = format::to_json(&BraceFile::from_brace(&b));
        let parsed: BraceFile = format::from_json(&text).unwrap();
        prop_assert_eq!(format::to_json(&parsed), text.clone());
        let back = parsed.to_brace().unwrap();
        prop_assert_eq!(&back, b.as_ref());
    }

    #[test]
    fn subspace_files_round_trip((b, seed) in brace_and_seed()) {
        let text = format::to_json(&SubspaceFile::from_subspace(&seed));
        let parsed: SubspaceFile = format::from_json(&text).unwrap();
        prop_assert_eq!(parsed.to_subspace(b.field()).unwrap(), seed);
    }
}

/// `x∘y = x + u^x y` on `ℤ_n`; a skew brace only for some `(n, u)`.
fn affine_skew(n: usize, u: usize) -> SkewBrace {
    let pow = |x: usize| (0..x).fold(1usize, |acc, _| acc * u % n);
    SkewBrace {
        order: n,
        dot: (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect(),
        bullet: (0..n).map(|x| (0..n).map(|y| (x + pow(x) * y) % n).collect()).collect(),
        identity: 0,
    }
}

/// Brute-force skew brace test, independent of the library.
fn is_skew_brace(s: &SkewBrace) -> bool {
    let n = s.order;
    let e = s.identity;
    let group = |t: &Vec<Vec<usize>>| {
        (0..n).all(|x| t[e][x] == x && t[x][e] == x && (0..n).any(|y| t[x][y] == e && t[y][x] == e))
            && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[x][t[y][z]])))
    };
    if !group(&s.dot) || !group(&s.bullet) {
        return false;
    }
    let dinv = |x: usize| (0..n).find(|&y| s.dot[x][y] == e).unwrap();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| s.bullet[a][s.dot[b][c]] == s.dot[s.dot[s.bullet[a][b]][dinv(a)]][s.bullet[a][c]])))
}

fn relabel(s: &SkewBrace, perm: &[usize]) -> SkewBrace {
    let n = s.order;
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let table = |t: &Vec<Vec<usize>>| (0..n).map(|x| (0..n).map(|y| perm[t[inv[x]][inv[y]]]).collect()).collect();
    SkewBrace { order: n, dot: table(&s.dot), bullet: table(&s.bullet), identity: perm[s.identity] }
}

fn check_lift(s: &SkewBrace) -> Result<(), TestCaseError> {
    let n = s.order;
    let text = format::to_json(&SkewBraceFile::from_skew(s));
    prop_assert_eq!(&format::from_json::<SkewBraceFile>(&text).unwrap().to_skew().unwrap(), s);
    let b = linearize(s, Field::Rationals);
    prop_assert!(verify_hopf_brace(&b).all_passed());
    let c = ybe_operator(&b);
    prop_assert!(braid_check(&c));
    let sol = set_solution(s);
    prop_assert!(sol.is_bijective() && sol.braid_check());
    for x in 0..n {
        for y in 0..n {
            let (a, bb) = sol.apply(x, y);
            prop_assert_eq!(c.mat.col(x * n + y), &sparse::unit_vec(Field::Rationals, a * n + bb));
        }
    }
    prop_assert!(SubBrace::full(&Arc::new(b)).is_normal());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn affine_tables_match_oracle((n, u) in (2usize..9).prop_flat_map(|n| (Just(n), 1..n))) {
        let s = affine_skew(n, u);
        let expected = is_skew_brace(&s);
        prop_assert_eq!(verify_skew_brace(&s).all_passed(), expected);
        if expected {
            check_lift(&s)?;
        }
    }

    #[test]
    fn relabelled_catalog_braces_lift((i, perm) in (0usize..7).prop_flat_map(|i| {
        let n = hopfbrace::skew::catalog::catalog()[i].1.order;
        (Just(i), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })) {
        let s = relabel(&hopfbrace::skew::catalog::catalog()[i].1, &perm);
        prop_assert!(is_skew_brace(&s));
        prop_assert!(verify_skew_brace(&s).all_passed());
        check_lift(&s)?;
    }
}
