//! Exact scalars over ℚ and GF(p).
//!
//! Rationals are stored as reduced `i128` fractions with a positive
//! denominator. Every operation is checked; a result whose numerator or
//! denominator does not fit is reported as [`Error::Overflow`] instead of
//! wrapping. `i128::MIN` is never produced, so negation cannot overflow.
//! Residues modulo p are stored in `[0, p)`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A validated prime modulus, `2 <= p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p) {
            return Err(Error::InvalidField(format!("modulus {p} out of range [2, 2^31)")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Prime(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
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

/// The base field of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(Prime),
}

impl FieldSpec {
    pub fn gf(p: u64) -> Result<Self> {
        Prime::new(p).map(FieldSpec::Prime)
    }

    /// Number of elements, `None` for ℚ.
    pub fn order(self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(p.get() as u64),
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p.get(),
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar(Repr::Rational { num: v as i128, den: 1 }),
            FieldSpec::Prime(p) => {
                let m = p.get() as i64;
                Scalar(Repr::Residue {
                    value: v.rem_euclid(m) as u32,
                    p,
                })
            }
        }
    }

    /// The residue with the given value (reduced mod p). On ℚ this is the integer.
    pub fn from_u64(self, v: u64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar(Repr::Rational { num: v as i128, den: 1 }),
            FieldSpec::Prime(p) => Scalar(Repr::Residue {
                value: (v % p.get() as u64) as u32,
                p,
            }),
        }
    }

    /// `num / den` in this field.
    pub fn fraction(self, num: i128, den: i128) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldSpec::Rationals => Scalar::rational(num, den),
            FieldSpec::Prime(p) => {
                let m = p.get() as i128;
                let n = Scalar(Repr::Residue {
                    value: num.rem_euclid(m) as u32,
                    p,
                });
                let d = Scalar(Repr::Residue {
                    value: den.rem_euclid(m) as u32,
                    p,
                });
                n.div(&d)
            }
        }
    }

    /// Parses `"3"`, `"-7"` or `"5/6"`. GF(p) values are reduced mod p.
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::ParseScalar(s.to_string());
        let parse_int = |t: &str| -> Result<i128> {
            let t = t.trim();
            if t.is_empty() || !t.trim_start_matches(['-', '+']).bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<i128>().map_err(|_| match self {
                FieldSpec::Rationals => Error::Overflow,
                FieldSpec::Prime(_) => bad(),
            })
        };
        match s.split_once('/') {
            None => self.fraction(parse_int(s)?, 1),
            Some((n, d)) => self.fraction(parse_int(n)?, parse_int(d)?),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "GF({})", p.get()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Repr {
    Rational { num: i128, den: i128 },
    Residue { value: u32, p: Prime },
}

/// An exact field element in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn checked(v: Option<i128>) -> Result<i128> {
    match v {
        Some(x) if x != i128::MIN => Ok(x),
        _ => Err(Error::Overflow),
    }
}

impl Scalar {
    /// The reduced rational `num / den`.
    pub fn rational(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        if num == i128::MIN || den == i128::MIN {
            return Err(Error::Overflow);
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Ok(Scalar(Repr::Rational { num: n, den: d }))
    }

    pub fn field(&self) -> FieldSpec {
        match self.0 {
            Repr::Rational { .. } => FieldSpec::Rationals,
            Repr::Residue { p, .. } => FieldSpec::Prime(p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self.0 {
            Repr::Rational { num, .. } => num == 0,
            Repr::Residue { value, .. } => value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self.0 {
            Repr::Rational { num, den } => num == 1 && den == 1,
            Repr::Residue { value, .. } => value == 1,
        }
    }

    /// Numerator and denominator, for rationals.
    pub fn as_fraction(&self) -> Option<(i128, i128)> {
        match self.0 {
            Repr::Rational { num, den } => Some((num, den)),
            Repr::Residue { .. } => None,
        }
    }

    /// The canonical residue in `[0, p)`, for GF(p).
    pub fn residue(&self) -> Option<u32> {
        match self.0 {
            Repr::Residue { value, .. } => Some(value),
            Repr::Rational { .. } => None,
        }
    }

    /// Sign of a rational; `None` over GF(p), which is not ordered.
    pub fn signum(&self) -> Option<Ordering> {
        self.as_fraction().map(|(n, _)| n.cmp(&0))
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        match (self.0, other.0) {
            (Repr::Rational { num: a, den: b }, Repr::Rational { num: c, den: d }) => {
                if b == 1 && d == 1 {
                    return Ok(Scalar(Repr::Rational {
                        num: checked(a.checked_add(c))?,
                        den: 1,
                    }));
                }
                let g = gcd(b as u128, d as u128) as i128;
                let (bg, dg) = (b / g, d / g);
                let num = checked(checked(a.checked_mul(dg))?.checked_add(checked(c.checked_mul(bg))?))?;
                let den = checked(b.checked_mul(dg))?;
                Scalar::rational(num, den)
            }
            (Repr::Residue { value: a, p }, Repr::Residue { value: b, p: q }) if p == q => {
                let m = p.get() as u64;
                Ok(Scalar(Repr::Residue {
                    value: ((a as u64 + b as u64) % m) as u32,
                    p,
                }))
            }
            _ => Err(Error::FieldMismatch(self.field(), other.field())),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self.0 {
            Repr::Rational { num, den } => Scalar(Repr::Rational { num: -num, den }),
            Repr::Residue { value, p } => {
                let v = if value == 0 { 0 } else { p.get() - value };
                Scalar(Repr::Residue { value: v, p })
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self.0, other.0) {
            (Repr::Rational { num: a, den: b }, Repr::Rational { num: c, den: d }) => {
                if a == 0 || c == 0 {
                    return Ok(Scalar(Repr::Rational { num: 0, den: 1 }));
                }
                let g1 = gcd(a.unsigned_abs(), d as u128) as i128;
                let g2 = gcd(c.unsigned_abs(), b as u128) as i128;
                let num = checked((a / g1).checked_mul(c / g2))?;
                let den = checked((b / g2).checked_mul(d / g1))?;
                Ok(Scalar(Repr::Rational { num, den }))
            }
            (Repr::Residue { value: a, p }, Repr::Residue { value: b, p: q }) if p == q => {
                let m = p.get() as u64;
                Ok(Scalar(Repr::Residue {
                    value: ((a as u64 * b as u64) % m) as u32,
                    p,
                }))
            }
            _ => Err(Error::FieldMismatch(self.field(), other.field())),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.0 {
            Repr::Rational { num, den } => Scalar::rational(den, num),
            Repr::Residue { p, .. } => self.pow(p.get() as u64 - 2),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Result<Scalar> {
        let mut base = *self;
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Repr::Rational { num, den: 1 } => write!(f, "{num}"),
            Repr::Rational { num, den } => write!(f, "{num}/{den}"),
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
