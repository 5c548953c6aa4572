//! Exact coefficients: arbitrary precision rationals or a prime field `F_p`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for a prime field; products fit in `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// The coefficient field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// The prime field `F_p`. Rejects composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_PRIME {
            return Err(Error::domain(format!(
                "modulus {p} exceeds the supported maximum {MAX_PRIME}"
            )));
        }
        if !is_prime(p) {
            return Err(Error::domain(format!("{p} is not prime")));
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
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Modular {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Scalar::Modular {
                    value: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    /// Maps a rational into this field. Fails in `F_p` when `p` divides the
    /// denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match *self {
            Field::Rationals => Ok(Scalar::Rational(q.clone())),
            Field::Prime(_) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                let inv = den.inv().ok_or_else(|| {
                    Error::domain(format!(
                        "denominator of {q} vanishes in characteristic {}",
                        self.characteristic()
                    ))
                })?;
                Ok(num * inv)
            }
        }
    }

    /// Parses an exact scalar: an integer or `p/q`. Decimal points and
    /// exponents are rejected rather than rounded.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let q = parse_rational(text)?;
        self.from_rational(&q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Parses `"a"` or `"a/b"` with optional sign into a reduced rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::parse(0, "empty scalar"));
    }
    if let Some(pos) = t.find(|c: char| !(c.is_ascii_digit() || c == '-' || c == '+' || c == '/')) {
        return Err(Error::parse(
            pos,
            format!("unexpected character in exact scalar {t:?}"),
        ));
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (t, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(0, format!("invalid numerator in {t:?}")))?;
    let den: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::parse(t.find('/').unwrap() + 1, format!("invalid denominator in {t:?}")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::parse(t.find('/').unwrap_or(0) + 1, "zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// An element of a [`Field`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

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

    /// True for rationals with negative sign. Prime field elements are never
    /// negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }

    pub fn inv(&self) -> Option<Scalar> {
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

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Modular { value, .. } => i64::try_from(*value).ok(),
        }
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "arithmetic across different coefficient fields"
        );
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: (a + b) % modulus,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: a * b % modulus,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
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

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % modulus as u128) as u64;
        }
        base = (base as u128 * base as u128 % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime(p: u64) -> bool {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(&a + &b, f.from_i64(1));
        assert_eq!(&a * &b, f.from_i64(1));
        assert_eq!((&a * &a.inv().unwrap()), f.one());
        assert_eq!(-&a, f.from_i64(4));
        assert!(f.from_i64(-7).is_zero());
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }

    #[test]
    fn parse_exact_scalars() {
        let q = Field::Rationals;
        assert_eq!(q.parse_scalar("6/4").unwrap().to_string(), "3/2");
        assert_eq!(q.parse_scalar("-3").unwrap().to_string(), "-3");
        assert_eq!(q.parse_scalar("2/-4").unwrap().to_string(), "-1/2");
        assert!(q.parse_scalar("1.5").is_err());
        assert!(q.parse_scalar("1e3").is_err());
        assert!(q.parse_scalar("1/0").is_err());
        let f3 = Field::Prime(3);
        assert_eq!(f3.parse_scalar("1/2").unwrap(), f3.from_i64(2));
        assert!(f3.parse_scalar("1/3").is_err());
    }
}
