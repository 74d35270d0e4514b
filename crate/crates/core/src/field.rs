//! Base fields and exact scalars.
//!
//! Two kinds of base field are supported: the rationals (arbitrary precision,
//! always kept in lowest terms) and prime fields `F_p` with `p < 2^32`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field of every vector space in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= (1 << 32) {
            return Err(Error::InvalidField(format!("modulus {p} exceeds 2^32")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    /// The scalar `num / den`; fails when `den` vanishes in this field.
    pub fn ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Parse("denominator is zero".into()));
        }
        match self {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let m = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &m) + &m) % &m;
                    r.to_u64().expect("residue fits in u64")
                };
                let d = reduce(den);
                if d == 0 {
                    return Err(Error::Parse(format!("denominator {den} vanishes mod {p}")));
                }
                let n = Scalar::Modular { value: reduce(num), modulus: *p };
                let d = Scalar::Modular { value: d, modulus: *p };
                Ok(&n * &d.inverse().expect("nonzero residue is invertible"))
            }
        }
    }

    /// Every element of a prime field, in residue order. `None` over the rationals.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => {
                let p = *p;
                Some((0..p).map(move |value| Scalar::Modular { value, modulus: p }))
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rationals, Scalar::Rational(_)) => true,
            (Field::Prime(p), Scalar::Modular { modulus, .. }) => p == modulus,
            _ => false,
        }
    }

    /// Lifts a rational to this field (reducing mod `p` if needed).
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        self.ratio(q.numer(), q.denom())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Numerator and denominator of the canonical representative
    /// (residues are reported as `value / 1`).
    pub fn to_ratio(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rational(q) => (q.numer().clone(), q.denom().clone()),
            Scalar::Modular { value, .. } => (BigInt::from(*value), BigInt::one()),
        }
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Modular { value, modulus }, Scalar::Modular { value: v, modulus: m }) => {
                debug_assert_eq!(modulus, m);
                *value = (*value + v) % *modulus;
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    /// `self += a * b`
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        match (self, a, b) {
            (Scalar::Rational(s), Scalar::Rational(x), Scalar::Rational(y)) => *s += x * y,
            (Scalar::Modular { value, modulus }, Scalar::Modular { value: x, .. }, Scalar::Modular { value: y, .. }) => {
                *value = (*value + x * y % *modulus) % *modulus;
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, modulus: m }) => {
                debug_assert_eq!(modulus, m);
                Scalar::Modular { value: a * b % modulus, modulus: *modulus }
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else if q.is_negative() {
                    write!(f, "-{}/{}", q.numer().abs(), q.denom())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(7919).is_ok());
    }

    #[test]
    fn modular_inverse_and_negation() {
        let f = Field::prime(7).unwrap();
        let three = f.int(3);
        assert_eq!(&three * &three.inverse().unwrap(), f.one());
        assert_eq!(&three + &(-&three), f.zero());
        assert_eq!(f.int(-1), f.int(6));
    }

    #[test]
    fn ratio_reduces_and_rejects_zero_denominator() {
        let q = Field::Rationals;
        assert_eq!(q.ratio(&BigInt::from(2), &BigInt::from(4)).unwrap().to_ratio(), (BigInt::from(1), BigInt::from(2)));
        assert!(q.ratio(&BigInt::from(1), &BigInt::from(0)).is_err());
        let f2 = Field::Prime(2);
        assert!(f2.ratio(&BigInt::from(1), &BigInt::from(2)).is_err());
        assert_eq!(f2.ratio(&BigInt::from(3), &BigInt::from(1)).unwrap(), f2.one());
    }

    #[test]
    fn add_product_accumulates() {
        let q = Field::Rationals;
        let mut acc = q.int(1);
        acc.add_product(&q.int(2), &q.int(3));
        assert_eq!(acc, q.int(7));
    }
}
