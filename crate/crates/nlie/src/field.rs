//! Coefficient fields and exact scalar arithmetic.
//!
//! Two domains are supported: the rationals, backed by arbitrary-precision
//! integers so no computation ever overflows or rounds, and prime fields
//! GF(p) with residues stored in [0, p). A scalar carries its field with
//! it; arithmetic between scalars of different fields is a programming
//! error and panics, while the public constructors (matrices, algebras,
//! parsers) check field consistency up front and return errors.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{NLieError, Result};

/// Which field coefficients live in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// GF(p); the modulus is verified prime on construction.
    PrimeField(u64),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// GF(p). Fails unless `p` is prime.
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(NLieError::NotPrime(p))
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldSpec::PrimeField(_))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_integer(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_integer(1)
    }

    pub fn from_integer(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => Scalar::Residue {
                value: reduce_i64(n, *p),
                modulus: *p,
            },
        }
    }

    /// Interprets the rational num/den in this field. Over GF(p) the
    /// denominator must be invertible.
    pub fn from_big_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(NLieError::DivisionByZero);
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            FieldSpec::PrimeField(p) => {
                let n = reduce_bigint(num, *p);
                let d = reduce_bigint(den, *p);
                if d == 0 {
                    return Err(NLieError::DenominatorVanishes(d, *p));
                }
                let inv = inv_mod(d, *p)?;
                Ok(Scalar::Residue {
                    value: mul_mod(n, inv, *p),
                    modulus: *p,
                })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "gf:{p}"),
        }
    }
}

/// An exact field element: a reduced fraction or a residue in [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q })
                if p == q =>
            {
                let s = a + b;
                Scalar::Residue {
                    value: if s >= *p { s - p } else { s },
                    modulus: *p,
                }
            }
            _ => panic!("scalar field mismatch in add"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Residue {
                    value: mul_mod(*a, *b, *p),
                    modulus: *p,
                }
            }
            _ => panic!("scalar field mismatch in mul"),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(NLieError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Residue { value, modulus } => Ok(Scalar::Residue {
                value: inv_mod(*value, *modulus)?,
                modulus: *modulus,
            }),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }
}

/// Total order used only for canonical sorting of bases; it is not a
/// field order. Residues compare by value, rationals by value, and the
/// two variants never meet in practice because containers are
/// single-field.
impl Ord for Scalar {
    fn cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                p.cmp(q).then(a.cmp(b))
            }
            (Scalar::Rational(_), Scalar::Residue { .. }) => Ordering::Less,
            (Scalar::Residue { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.numer().is_negative() {
                    write!(f, "-{}/{}", r.numer().abs(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn reduce_i64(n: i64, p: u64) -> u64 {
    let m = n.rem_euclid(p as i64);
    m as u64
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    use num_integer::Integer;
    let m = n.mod_floor(&BigInt::from(p));
    // mod_floor of a positive modulus is in [0, p)
    let (_, digits) = m.to_u64_digits();
    *digits.first().unwrap_or(&0)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> Result<u64> {
    if a == 0 {
        return Err(NLieError::NotInvertible(a, p));
    }
    // p is prime, so Fermat gives the inverse
    Ok(pow_mod(a, p - 2, p))
}

/// Deterministic Miller-Rabin; the base set below is exact for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(101));
        assert!(is_prime(7919));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(91)); // 7 * 13
        assert!(!is_prime(1_000_000_001)); // 7 * 11 * 13 * 19 * 52579
    }

    #[test]
    fn prime_field_rejects_composite_modulus() {
        assert_eq!(FieldSpec::prime_field(6), Err(NLieError::NotPrime(6)));
        assert!(FieldSpec::prime_field(7).is_ok());
    }

    #[test]
    fn residue_arithmetic_stays_reduced() {
        let f = FieldSpec::prime_field(5).unwrap();
        let a = f.from_integer(3);
        let b = f.from_integer(4);
        assert_eq!(a.add(&b), f.from_integer(2));
        assert_eq!(a.mul(&b), f.from_integer(2));
        assert_eq!(a.sub(&b), f.from_integer(4));
        assert_eq!(f.from_integer(-1), f.from_integer(4));
        assert_eq!(a.inv().unwrap(), f.from_integer(2)); // 3 * 2 = 6 = 1 mod 5
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = FieldSpec::rationals();
        let third = f
            .from_big_ratio(&BigInt::from(1), &BigInt::from(3))
            .unwrap();
        let mut acc = f.zero();
        for _ in 0..3 {
            acc = acc.add(&third);
        }
        assert!(acc.is_one());
        assert_eq!(third.to_string(), "1/3");
        assert_eq!(third.neg().to_string(), "-1/3");
        assert_eq!(f.from_integer(-7).to_string(), "-7");
    }

    #[test]
    fn ratio_reduces_into_prime_field() {
        let f = FieldSpec::prime_field(7).unwrap();
        // 1/2 = 4 in GF(7)
        let half = f
            .from_big_ratio(&BigInt::from(1), &BigInt::from(2))
            .unwrap();
        assert_eq!(half, f.from_integer(4));
        // denominator divisible by p has no meaning
        assert!(f
            .from_big_ratio(&BigInt::from(1), &BigInt::from(14))
            .is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_field_arithmetic_panics() {
        let a = FieldSpec::rationals().one();
        let b = FieldSpec::prime_field(2).unwrap().one();
        let _ = a.add(&b);
    }
}
