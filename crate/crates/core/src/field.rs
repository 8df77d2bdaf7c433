//! Exact scalar arithmetic over ℚ and prime fields GF(p).
//!
//! Every scalar is kept in canonical form: rationals reduced with positive
//! denominator (delegated to [`num_rational::BigRational`]), prime-field
//! elements as residues in `[0, p)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The scalar field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField { p: u64 },
}

pub const MAX_PRIME: u64 = 97;

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidInput {
                context: format!("{p} is not a prime in [2, {MAX_PRIME}]"),
            });
        }
        Ok(FieldSpec::PrimeField { p })
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField { p } => Scalar::Mod { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField { p } => Scalar::Mod { v: 1 % p, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField { p } => {
                let p = *p;
                let v = n.rem_euclid(p as i64) as u64;
                Scalar::Mod { v, p }
            }
        }
    }

    /// Yields every field element exactly once, in increasing residue order.
    pub fn enumerate_scalars(&self) -> Result<Vec<Scalar>> {
        match self {
            FieldSpec::Rationals => Err(Error::NotEnumerable),
            FieldSpec::PrimeField { p } => {
                Ok((0..*p).map(|v| Scalar::Mod { v, p: *p }).collect())
            }
        }
    }

    /// Number of field elements, if finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField { p } => Some(*p),
        }
    }

    /// Parses a scalar literal: `"a/b"` or `"a"` over ℚ, an integer over GF(p).
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            FieldSpec::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let num = BigInt::from_str(num).map_err(|_| Error::InvalidInput {
                    context: format!("cannot parse rational {s:?}"),
                })?;
                let den = BigInt::from_str(den).map_err(|_| Error::InvalidInput {
                    context: format!("cannot parse rational {s:?}"),
                })?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rat(BigRational::new(num, den)))
            }
            FieldSpec::PrimeField { .. } => {
                let n = i64::from_str(s).map_err(|_| Error::InvalidInput {
                    context: format!("cannot parse field element {s:?}"),
                })?;
                Ok(self.from_i64(n))
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod { p, .. } => FieldSpec::PrimeField { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { v, p } => *v == 1 % *p,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => Scalar::Mod {
                v: (a + b) % p,
                p: *p,
            },
            _ => panic!("field mismatch in scalar addition"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => Scalar::Mod {
                v: (a * b) % p,
                p: *p,
            },
            _ => panic!("field mismatch in scalar multiplication"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { v, p } => Scalar::Mod {
                v: (p - v) % p,
                p: *p,
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Mod { v, p } => Scalar::Mod {
                v: pow_mod(*v, p - 2, *p),
                p: *p,
            },
        })
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

/// The binary/unary scalar operations exposed to the batch front-end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Inv,
}

/// Checked scalar arithmetic with explicit field-mismatch detection.
pub fn arith(op: ArithOp, a: &Scalar, b: Option<&Scalar>) -> Result<Scalar> {
    if let Some(b) = b {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch);
        }
    }
    match op {
        ArithOp::Add => Ok(a.add(b.ok_or(Error::FieldMismatch)?)),
        ArithOp::Mul => Ok(a.mul(b.ok_or(Error::FieldMismatch)?)),
        ArithOp::Neg => Ok(a.neg()),
        ArithOp::Inv => a.inv(),
    }
}
