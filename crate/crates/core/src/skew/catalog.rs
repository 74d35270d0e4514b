//! Built-in finite skew braces.

use crate::skew::SkewBrace;

fn table(n: usize, op: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|x| (0..n).map(|y| op(x, y)).collect()).collect()
}

fn build(dot: Vec<Vec<usize>>, bullet: Vec<Vec<usize>>) -> SkewBrace {
    let s = SkewBrace { order: dot.len(), dot, bullet, identity: 0 };
    debug_assert!(crate::skew::verify_skew_brace(&s).all_passed());
    s
}

/// Permutations of `{0,1,2}` in lexicographic order; index 0 is the identity.
pub fn s3_elements() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

/// `(p·q)(i) = p(q(i))` on the lexicographically ordered permutations.
pub fn s3_table() -> Vec<Vec<usize>> {
    let els = s3_elements();
    let index = |p: [usize; 3]| els.iter().position(|q| *q == p).expect("permutation");
    table(6, |a, b| {
        let (p, q) = (els[a], els[b]);
        index([p[q[0]], p[q[1]], p[q[2]]])
    })
}

/// Trivial brace on the cyclic group of order `n`.
pub fn trivial_cyclic(n: usize) -> SkewBrace {
    let t = table(n, |x, y| (x + y) % n);
    build(t.clone(), t)
}

/// Trivial brace on `C₂ × C₂`, element `(a, b)` at index `2a + b`.
pub fn trivial_klein() -> SkewBrace {
    let t = table(4, |x, y| x ^ y);
    build(t.clone(), t)
}

pub fn trivial_s3() -> SkewBrace {
    let t = s3_table();
    build(t.clone(), t)
}

/// `x·y = x + y` and `x∘y = x + y + 2xy` modulo 4.
pub fn b4() -> SkewBrace {
    build(table(4, |x, y| (x + y) % 4), table(4, |x, y| (x + y + 2 * x * y) % 4))
}

/// `S₃` with `x∘y = y·x`.
pub fn op_s3() -> SkewBrace {
    let t = s3_table();
    let op = table(6, |x, y| t[y][x]);
    build(t, op)
}

/// Every built-in brace with a stable name.
pub fn catalog() -> Vec<(&'static str, SkewBrace)> {
    vec![
        ("trivial_c2", trivial_cyclic(2)),
        ("trivial_c3", trivial_cyclic(3)),
        ("trivial_c4", trivial_cyclic(4)),
        ("trivial_c2xc2", trivial_klein()),
        ("trivial_s3", trivial_s3()),
        ("b4", b4()),
        ("op_s3", op_s3()),
    ]
}
