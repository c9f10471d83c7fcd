//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary precision fraction kept in lowest terms with a
//! positive denominator. Nothing in this crate ever rounds.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational as Rational;

/// An integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` in lowest terms. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `2^e` for any sign of `e`.
pub fn pow2(e: i32) -> Rational {
    let p = Rational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `1 / n!`
pub fn inv_factorial(n: u32) -> Rational {
    Rational::new(BigInt::one(), factorial(n))
}

/// Renders as `a/b`, or `a` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Inverse of [`format_rational`].
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Whether `value` is an integer multiple of `modulus`.
pub fn divides(modulus: &BigInt, value: &Rational) -> bool {
    value.is_integer() && (value.numer() % modulus).is_zero()
}

/// Largest power of two dividing a nonzero integer.
pub fn two_adic_valuation(n: &BigInt) -> Option<u64> {
    if n.is_zero() {
        None
    } else {
        n.abs().trailing_zeros()
    }
}
