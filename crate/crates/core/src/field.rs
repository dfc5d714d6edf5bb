//! Exact coefficient fields.
//!
//! A [`Field`] is a small context value (the rationals carry no data, a prime
//! field carries its modulus) together with an associated element type. All
//! arithmetic goes through the context, which lets a prime field be chosen at
//! run time while the rest of the crate stays generic over the field.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default characteristic for prime-field computations.
pub const DEFAULT_PRIME: u64 = 32003;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// Runtime description of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub kind: FieldKind,
    pub characteristic: u64,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec {
        kind: FieldKind::Rationals,
        characteristic: 0,
    };

    pub fn prime(p: u64) -> Result<Self> {
        PrimeField::new(p).map(|f| f.spec())
    }

    /// Parses `Q`, `Fp:<p>` or `F <p>`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(Self::RATIONALS);
        }
        let rest = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("F "))
            .or_else(|| s.strip_prefix("F:"))
            .ok_or_else(|| Error::InvalidField(format!("unrecognised field `{s}`")))?;
        let p: u64 = rest
            .trim()
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad characteristic `{rest}`")))?;
        Self::prime(p)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::PrimeField => write!(f, "Fp:{}", self.characteristic),
        }
    }
}

/// An exact field, represented by a context value.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;

    /// Writes `a` in the polynomial text grammar; `None` when the element is
    /// not a plain integer (the caller then emits a quotient).
    fn to_integer_repr(&self, a: &Self::Elem) -> (BigInt, Option<BigInt>);

    /// Draws a scalar for a generic linear combination.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Whether the field is large enough that seeded sampling hits a proper
    /// closed set with negligible probability.
    fn has_room_for_sampling(&self) -> bool;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// The rational numbers with arbitrary-precision normalized fractions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::RATIONALS
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn to_integer_repr(&self, a: &BigRational) -> (BigInt, Option<BigInt>) {
        if a.is_integer() {
            (a.numer().clone(), None)
        } else {
            (a.numer().clone(), Some(a.denom().clone()))
        }
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-10..=10))
    }
    fn has_room_for_sampling(&self) -> bool {
        true
    }
}

/// The prime field `Z/pZ` with word-size arithmetic; `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::InvalidField(format!(
                "characteristic {p} does not fit in 32 bits"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Self { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec {
            kind: FieldKind::PrimeField,
            characteristic: self.p,
        }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn from_bigint(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }
    fn to_integer_repr(&self, a: &u64) -> (BigInt, Option<BigInt>) {
        // symmetric representative in (-p/2, p/2]
        let v = if *a > self.p / 2 {
            -((self.p - a) as i64)
        } else {
            *a as i64
        };
        (BigInt::from(v), None)
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn has_room_for_sampling(&self) -> bool {
        self.p >= 101
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Formats an integer-or-fraction pair as returned by [`Field::to_integer_repr`].
pub(crate) fn format_scalar(num: &BigInt, den: &Option<BigInt>) -> String {
    match den {
        None => num.to_string(),
        Some(d) => format!("{}/{}", num.abs(), d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse_round_trip() {
        let f = PrimeField::default();
        for a in [1u64, 2, 3, 17, 32002, 12345] {
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn rejects_composite_and_large_moduli() {
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new((1 << 32) + 15).is_err());
        assert!(PrimeField::new(5).is_ok());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::RATIONALS);
        let fp = FieldSpec::parse("Fp:32003").unwrap();
        assert_eq!(fp.characteristic, 32003);
        assert_eq!(FieldSpec::parse("F 7").unwrap().characteristic, 7);
        assert_eq!(fp.to_string(), "Fp:32003");
        assert!(FieldSpec::parse("Fp:9").is_err());
        assert!(FieldSpec::parse("R").is_err());
    }

    #[test]
    fn symmetric_representatives() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.to_integer_repr(&4).0, BigInt::from(-1));
        assert_eq!(f.to_integer_repr(&2).0, BigInt::from(2));
        assert_eq!(f.from_i64(-7), 3);
    }
}
