//! Coefficient fields.
//!
//! Polynomial arithmetic is generic over a [`Field`] descriptor that owns the
//! element representation and the arithmetic. Two fields are provided:
//! [`PrimeField`] (F_p with a runtime modulus, elements stored as canonical
//! representatives in `0..p`) and [`Rationals`] (exact arbitrary-precision
//! rationals). The characteristic doubles as the field's name: `p = 0` is the
//! rationals, `p` prime is F_p.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A coefficient field together with its element representation.
///
/// Laws expected by the polynomial layer:
/// - `(Elem, add, zero, neg)` is an abelian group;
/// - `(Elem, mul, one)` is a commutative monoid distributing over `add`;
/// - `inv` returns `None` exactly on `zero`, and `mul(a, inv(a)) = one`
///   otherwise (so nonzero elements never multiply to zero).
pub trait Field: Clone + Eq + fmt::Debug {
    type Elem: Clone + Eq + Hash + fmt::Debug;

    /// Builds the field of the given characteristic, or fails when this
    /// field type cannot represent it.
    fn for_characteristic(p: u64) -> Result<Self, Error>
    where
        Self: Sized;

    /// 0 for the rationals, p for F_p.
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Embeds an integer.
    fn from_int(&self, n: i64) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Canonical text form of an element: decimal representative for F_p,
    /// `num` or `num/den` for rationals.
    fn render(&self, a: &Self::Elem) -> String;

    /// Whether the canonical text form starts with a minus sign. Used by the
    /// polynomial printer to emit `a - b` instead of `a + -b`.
    fn renders_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    /// The element whose text form is the unsigned part of `a`.
    fn render_abs(&self, a: &Self::Elem) -> Self::Elem {
        a.clone()
    }
}

/// Deterministic primality test by trial division; inputs here are small.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// The prime field F_p with a runtime modulus.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not a prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce(&self, n: i64) -> u64 {
        let p = self.p as i128;
        (((n as i128 % p) + p) % p) as u64
    }

    fn pow_mod(&self, base: u64, mut exp: u64) -> u64 {
        let p = self.p as u128;
        let mut acc: u128 = 1;
        let mut b = base as u128 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        acc as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn for_characteristic(p: u64) -> Result<Self, Error> {
        if p == 0 {
            return Err(Error::Mismatch(
                "characteristic 0 requires rational coefficients, not F_p".into(),
            ));
        }
        PrimeField::new(p)
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            // Fermat: a^(p-2) mod p
            Some(self.pow_mod(*a, self.p - 2))
        }
    }

    fn from_int(&self, n: i64) -> u64 {
        self.reduce(n)
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// The field Q of exact rationals.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn for_characteristic(p: u64) -> Result<Self, Error> {
        if p != 0 {
            return Err(Error::Mismatch(format!(
                "characteristic {p} requires F_p coefficients, not Q"
            )));
        }
        Ok(Rationals)
    }

    fn characteristic(&self) -> u64 {
        0
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

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn renders_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }

    fn render_abs(&self, a: &BigRational) -> BigRational {
        a.abs()
    }
}
