//! Exact coefficient rings.
//!
//! Everything in this crate is computed over [`Rational`] or over
//! [`crate::poly::Poly`], the sparse polynomial ring over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

/// Minimal commutative-ring interface needed by exterior-algebra elements
/// and endomorphism matrices.
pub trait Coeff: Clone + fmt::Debug + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn scale_int(&self, k: i64) -> Self {
        self.mul(&Self::from_rational(&rat(k)))
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
}

/// Integer as a rational.
pub fn rat(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// `num / den` as a rational. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `p/q`, including integers (`3/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or `p` (optionally signed).
pub fn parse_rational(token: &str) -> Result<Rational> {
    let bad = |m: &str| Error::Parse {
        line: 0,
        column: 0,
        message: format!("{m}: {token:?}"),
    };
    let (num, den) = match token.split_once('/') {
        Some((p, q)) => (p, q),
        None => (token, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad("bad numerator"))?;
    let den: BigInt = den.trim().parse().map_err(|_| bad("bad denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// True when `r` is a nonnegative integer.
pub fn is_nonnegative_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// Binomial coefficient extended to negative upper arguments,
/// `C(m, k) = (-1)^k C(k - m - 1, k)` for `m < 0`; zero for `k < 0`.
pub fn binomial(m: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    if m < 0 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        return sign * binomial(k - m - 1, k);
    }
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (m - i) / (i + 1);
    }
    acc
}
