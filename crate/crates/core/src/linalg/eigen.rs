//! Characteristic polynomials and eigenspaces with eigenvalues in the base field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{map_kernel, Mat, Subspace};

/// An eigenvalue with its eigenspace and generalized eigenspace, both as
/// subspaces of the ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigen {
    pub value: Scalar,
    pub eigenspace: Subspace,
    pub generalized: Subspace,
}

/// Coefficients of `det(x I - m)`, lowest degree first (monic).
pub fn characteristic_polynomial(m: &Mat) -> Vec<Scalar> {
    let field = m.field();
    let n = m.rows();
    assert_eq!(n, m.cols());
    // Reduce to upper Hessenberg form by similarity transforms.
    let mut h = m.clone();
    for col in 0..n.saturating_sub(2) {
        let m1 = col + 1;
        let Some(i) = (m1..n).find(|&i| !h.get(i, col).is_zero()) else {
            continue;
        };
        if i != m1 {
            for j in 0..n {
                let (a, b) = (h.get(i, j).clone(), h.get(m1, j).clone());
                h.set(i, j, b);
                h.set(m1, j, a);
            }
            for r in 0..n {
                let (a, b) = (h.get(r, i).clone(), h.get(r, m1).clone());
                h.set(r, i, b);
                h.set(r, m1, a);
            }
        }
        let t_inv = h.get(m1, col).inverse().expect("nonzero pivot");
        for j in (m1 + 1)..n {
            let u = h.get(j, col) * &t_inv;
            if u.is_zero() {
                continue;
            }
            let neg_u = -&u;
            for c in 0..n {
                let x = h.get(m1, c).clone();
                let mut y = h.get(j, c).clone();
                y.add_product(&neg_u, &x);
                h.set(j, c, y);
            }
            for r in 0..n {
                let x = h.get(r, j).clone();
                let mut y = h.get(r, m1).clone();
                y.add_product(&u, &x);
                h.set(r, m1, y);
            }
        }
    }
    // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
    let mut polys: Vec<Vec<Scalar>> = vec![vec![field.one()]];
    for k in 0..n {
        let pk = &polys[k];
        let mut next = vec![field.zero(); k + 2];
        for (d, c) in pk.iter().enumerate() {
            next[d + 1].add_assign_ref(c);
            next[d].add_product(&-h.get(k, k), c);
        }
        let mut prod = field.one();
        for i in (0..k).rev() {
            prod = &prod * h.get(i + 1, i);
            if prod.is_zero() {
                break;
            }
            let coeff = -&(h.get(i, k) * &prod);
            for (d, c) in polys[i].iter().enumerate() {
                next[d].add_product(&coeff, c);
            }
        }
        polys.push(next);
    }
    polys.pop().expect("nonempty")
}

pub fn eval_poly(poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in poly.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// All roots of `poly` in its field, each reported once, in ascending order.
pub fn roots_in_field(poly: &[Scalar], field: Field) -> Vec<Scalar> {
    if poly.iter().all(Scalar::is_zero) {
        return Vec::new();
    }
    match field {
        Field::Prime(_) => field.elements().expect("prime field").filter(|x| eval_poly(poly, x).is_zero()).collect(),
        Field::Rationals => rational_roots(poly),
    }
}

fn rational_roots(poly: &[Scalar]) -> Vec<Scalar> {
    let coeffs: Vec<BigRational> = poly.iter().map(|c| c.as_rational().expect("rational coefficients").clone()).collect();
    // Clear denominators into a primitive integer polynomial.
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    let lead_zeros = ints.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(BigRational::zero());
        ints.drain(..lead_zeros);
    }
    if ints.len() > 1 {
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let num_divs = divisors(&a0);
        let den_divs = divisors(&an);
        let mut candidates: Vec<BigRational> = Vec::new();
        for p in &num_divs {
            for q in &den_divs {
                let r = BigRational::new(p.clone(), q.clone());
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
        candidates.sort();
        candidates.dedup();
        for c in candidates {
            let mut acc = BigRational::zero();
            for k in ints.iter().rev() {
                acc = acc * &c + BigRational::from_integer(k.clone());
            }
            if acc.is_zero() {
                roots.push(c);
            }
        }
    }
    roots.sort();
    roots.into_iter().map(Scalar::Rational).collect()
}

/// Positive divisors of a positive integer, via complete factorization.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut factors = factorize(n);
    factors.sort();
    let mut divs = vec![BigInt::one()];
    let mut i = 0;
    while i < factors.len() {
        let p = factors[i].clone();
        let mut e = 0;
        while i < factors.len() && factors[i] == p {
            e += 1;
            i += 1;
        }
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

fn factorize(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut n = n.abs();
    if n.is_zero() || n.is_one() {
        return out;
    }
    let mut d = BigInt::from(2);
    let bound = BigInt::from(10_000);
    while d <= bound && &d * &d <= n {
        while (&n % &d).is_zero() {
            out.push(d.clone());
            n /= &d;
        }
        d += 1;
    }
    if n.is_one() {
        return out;
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            out.push(m);
            continue;
        }
        let f = pollard_rho(&m);
        stack.push(&m / &f);
        stack.push(f);
    }
    out
}

fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1: BigInt = n - 1;
    let mut d = n1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (BigInt::from(2), BigInt::from(2), BigInt::one());
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

/// Eigen-data of `op` restricted to the invariant subspace `v`, for every
/// eigenvalue lying in the base field.
pub fn rational_generalized_eigenspaces(op: &Mat, v: &Subspace) -> Result<Vec<Eigen>> {
    let field = op.field();
    let n = op.rows();
    if op.cols() != n || v.ambient_dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: v.ambient_dim() });
    }
    let d = v.dim();
    let mut cols = Vec::with_capacity(d);
    for b in v.vectors() {
        let image = op.apply(&b);
        cols.push(v.coordinates(&image).ok_or(Error::RestrictionFailure)?);
    }
    let restricted = Mat::from_columns(field, d, &cols);
    let poly = characteristic_polynomial(&restricted);
    let mut out = Vec::new();
    for value in roots_in_field(&poly, field) {
        let shifted = restricted.sub(&Mat::identity(field, d).scale(&value));
        let lift = |s: Subspace| -> Subspace {
            let vs: Vec<Vec<Scalar>> = s.vectors().iter().map(|c| v.combine(c)).collect();
            Subspace::span(field, n, &vs)
        };
        let eigenspace = lift(map_kernel(&shifted));
        let generalized = lift(map_kernel(&shifted.pow(d)));
        out.push(Eigen { value, eigenspace, generalized });
    }
    Ok(out)
}
