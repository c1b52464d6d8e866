//! Exact ground-field elements: arbitrary-precision rationals or residues mod a small prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest prime accepted for `Fp`; keeps every product below `u64::MAX`.
pub const MAX_PRIME: u32 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Q,
    Fp(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if p as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn fp(p: u32) -> Result<Field> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Fp(p))
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, v: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Fp(p) => Scalar::Fp {
                p,
                v: v.rem_euclid(p as i64) as u32,
            },
        }
    }

    /// Map an exact rational into this field.
    pub fn rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Q => Ok(Scalar::Q(q.clone())),
            Field::Fp(p) => {
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb).to_u64().unwrap_or(0);
                let den = q.denom().mod_floor(&pb).to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(Error::NotReducible(q.to_string(), p));
                }
                let inv = pow_mod(den, p as u64 - 2, p as u64);
                Ok(Scalar::Fp {
                    p,
                    v: (num * inv % p as u64) as u32,
                })
            }
        }
    }

    /// Parse `"a"` or `"a/b"` (integers, optional sign) into this field.
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let q = parse_rational(s)?;
        self.rational(&q)
    }

    pub fn name(self) -> String {
        match self {
            Field::Q => "Q".to_string(),
            Field::Fp(p) => format!("F{p}"),
        }
    }

    /// All field elements, for finite fields only.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Q => None,
            Field::Fp(p) => Some((0..p).map(|v| Scalar::Fp { p, v }).collect()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// A field element. Mixing fields in arithmetic panics: tensors are validated to be
/// single-field at construction, so a mismatch here is a programming error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u32, v: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: pow_mod(*v as u64, *p as u64 - 2, *p as u64) as u32,
            },
        })
    }

    /// Reduce a rational into `Fp`; identity for other combinations with equal fields.
    pub fn to_field(&self, field: Field) -> Result<Scalar> {
        match (self, field) {
            (Scalar::Q(q), f) => f.rational(q),
            (s, f) if s.field() == f => Ok(s.clone()),
            (s, f) => Err(Error::FieldMismatch(s.field(), f)),
        }
    }

    /// Residue for `Fp`, `None` for `Q`.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Fp { v, .. } => Some(*v),
            Scalar::Q(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, v }, Scalar::Fp { p: q, v: w }) if p == q => Scalar::Fp {
                p: *p,
                v: ((*v as u64 + *w as u64) % *p as u64) as u32,
            },
            _ => mismatch(self, o),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { p, v }, Scalar::Fp { p: q, v: w }) if p == q => Scalar::Fp {
                p: *p,
                v: ((*v as u64 + *p as u64 - *w as u64) % *p as u64) as u32,
            },
            _ => mismatch(self, o),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, v }, Scalar::Fp { p: q, v: w }) if p == q => Scalar::Fp {
                p: *p,
                v: (*v as u64 * *w as u64 % *p as u64) as u32,
            },
            _ => mismatch(self, o),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: (*p - *v) % *p,
            },
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Integers print bare, fractions as `a/b`; residues print as their canonical representative.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl Scalar {
    /// Sign-aware form used in polynomial text: `Some(true)` for negative rationals.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_rejects_composites() {
        assert!(Field::fp(4).is_err());
        assert!(Field::fp(1).is_err());
        assert!(Field::fp(7).is_ok());
    }

    #[test]
    fn q_lowest_terms() {
        let a = Field::Q.parse("6/-4").unwrap();
        assert_eq!(a.to_string(), "-3/2");
        let q = a.as_rational().unwrap();
        assert!(q.denom().is_positive());
    }

    #[test]
    fn fp_reduction() {
        let f = Field::fp(5).unwrap();
        assert_eq!(f.int(-2).residue(), Some(3));
        assert_eq!(f.parse("1/2").unwrap().residue(), Some(3));
        assert!(f.parse("1/5").is_err());
        let x = f.int(3);
        assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    #[should_panic]
    fn mixing_fields_panics() {
        let _ = Field::Q.one() + Field::fp(3).unwrap().one();
    }
}
