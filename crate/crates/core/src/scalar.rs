//! Exact field elements over the rationals or a prime field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The base field every structure in this crate is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// GF(p) for a prime `p`.
    Prime(u64),
}

impl FieldSpec {
    /// Validated constructor for GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::Malformed(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    /// The image of an integer in this field.
    pub fn int(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Parses a scalar string: an integer, `a/b` over the rationals, or a
    /// residue `0..p-1` over GF(p).
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match *self {
            FieldSpec::Rationals => {
                let value = if let Some((n, d)) = s.split_once('/') {
                    let n = parse_bigint(n)?;
                    let d = parse_bigint(d)?;
                    if d.is_zero() {
                        return Err(Error::Malformed(format!("zero denominator in {s:?}")));
                    }
                    BigRational::new(n, d)
                } else {
                    BigRational::from_integer(parse_bigint(s)?)
                };
                Ok(Scalar::Rational(value))
            }
            FieldSpec::Prime(p) => {
                let value: u64 = s
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad residue {s:?}")))?;
                if value >= p {
                    return Err(Error::Malformed(format!("residue {value} out of range for GF({p})")));
                }
                Ok(Scalar::Residue { value, modulus: p })
            }
        }
    }

    /// Enumerates every field element when the field is finite.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        match *self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some((0..p).map(move |value| Scalar::Residue { value, modulus: p })),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Malformed(format!("unknown field {s:?}")))?;
        let p: u64 = inner
            .parse()
            .map_err(|_| Error::Malformed(format!("unknown field {s:?}")))?;
        FieldSpec::prime(p)
    }
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| Error::Malformed(format!("bad integer {s:?}")))
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact element of a [`FieldSpec`].
///
/// Rationals are kept in lowest terms with a positive denominator, so equality
/// is structural. Arithmetic between elements of different fields is a logic
/// error and panics; constructors at the crate boundary reject mixed input.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
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

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The rational value, when this is a rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Residue { .. } => None,
        }
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc = 1u128 % m;
    let mut base = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("arithmetic between {} and {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue {
                    value: ((*a as u128 + (*p - *b) as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_canonical() {
        let q = FieldSpec::Rationals;
        let a = q.parse("2/4").unwrap();
        let b = q.parse("-1/-2").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1/2");
        assert_eq!(q.parse("6/3").unwrap().to_string(), "2");
        assert_eq!(q.parse("3/-6").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let a = f.int(3);
        let b = f.int(5);
        assert_eq!(&a + &b, f.int(1));
        assert_eq!(&a - &b, f.int(5));
        assert_eq!(&a * &b, f.int(1));
        assert_eq!(a.inv().unwrap(), f.int(5));
        assert_eq!(-&a, f.int(4));
        assert_eq!(f.int(-1), f.int(6));
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("GF(5)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        assert!("GF(6)".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
        assert!(FieldSpec::Prime(3).parse("3").is_err());
        assert!(FieldSpec::Rationals.parse("1/0").is_err());
        assert!(FieldSpec::Rationals.parse("x").is_err());
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let f = FieldSpec::prime(11).unwrap();
        let x = f.int(7);
        let mut acc = f.one();
        for e in 0..15u64 {
            assert_eq!(x.pow(e), acc);
            acc = &acc * &x;
        }
    }
}
