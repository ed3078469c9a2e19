//! Exact ground fields: the rationals and prime fields `GF(p)`.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The default prime, conventional for commutative algebra computations.
pub const DEFAULT_PRIME: u64 = 32003;

/// Largest prime modulus accepted; products of two residues must fit in `u64`.
pub const MAX_PRIME: u64 = (1 << 32) - 1;

/// Arithmetic of an exact field. Elements are plain values; the field value
/// carries whatever context (the modulus) the operations need.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    fn spec(&self) -> FieldSpec;
    fn render(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a - c * b`, the elimination step.
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(c, b))
    }

    fn from_ratio(&self, num: i64, den: i64) -> Self::Elem {
        assert!(den != 0, "zero denominator");
        self.mul(&self.from_i64(num), &self.inv(&self.from_i64(den)))
    }
}

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

impl FieldSpec {
    /// Checks the modulus: prime, odd, fits the arithmetic, and larger than
    /// every degree cutoff the run will use.
    pub fn validate(&self, max_degree: usize) -> Result<(), Error> {
        match *self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Prime(2) => Err(Error::InvalidField(
                "characteristic 2 is not supported".into(),
            )),
            FieldSpec::Prime(p) => {
                if !is_prime(p) {
                    return Err(Error::InvalidField(format!("{p} is not prime")));
                }
                if p > MAX_PRIME {
                    return Err(Error::InvalidField(format!(
                        "{p} exceeds the largest supported modulus {MAX_PRIME}"
                    )));
                }
                if p <= max_degree as u64 {
                    return Err(Error::InvalidField(format!(
                        "modulus {p} must exceed the degree cutoff {max_degree}"
                    )));
                }
                Ok(())
            }
        }
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `rationals`, `Q`, `prime:P`, `gf(P)` or a bare modulus.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().to_ascii_lowercase();
        if t == "rationals" || t == "q" || t == "qq" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("prime:")
            .or_else(|| t.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
            .unwrap_or(&t);
        digits
            .parse::<u64>()
            .map(FieldSpec::Prime)
            .map_err(|_| Error::InvalidField(format!("cannot parse field spec `{s}`")))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// `GF(p)` with residues stored in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        FieldSpec::Prime(p).validate(0)?;
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
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

impl Field for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        self.pow(*a, self.p - 2)
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    fn render(&self, a: &u64) -> String {
        // symmetric representative reads better for small integer data
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }

    #[inline]
    fn sub_mul(&self, a: &u64, c: &u64, b: &u64) -> u64 {
        self.sub(a, &(c * b % self.p))
    }
}

/// The rationals, with arbitrary-precision normalized fractions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
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

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in Q");
        a.recip()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.to_integer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().abs(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse_roundtrip() {
        let f = PrimeField::new(32003).unwrap();
        for a in [1u64, 2, 17, 32002, 12345] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_i64(-1), 32002);
        assert_eq!(f.render(&32002), "-1");
    }

    #[test]
    fn rational_ratio() {
        let q = Rationals;
        let x = q.from_ratio(6, -4);
        assert_eq!(q.render(&x), "-3/2");
        assert!(q.is_zero(&q.add(&x, &q.from_ratio(3, 2))));
    }

    #[test]
    fn spec_parsing_and_validation() {
        assert_eq!("rationals".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("prime:65537".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(65537));
        assert_eq!("GF(7)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert!(FieldSpec::Prime(2).validate(1).is_err());
        assert!(FieldSpec::Prime(15).validate(1).is_err());
        assert!(FieldSpec::Prime(5).validate(6).is_err());
        assert!(FieldSpec::Prime(32003).validate(6).is_ok());
    }
}
