//! Exact rational scalars: arbitrary-precision fractions in lowest terms with
//! a positive denominator, plus the `p/q` text form used by the CLI format.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Exact scalar type: arbitrary-precision rational, always reduced,
/// denominator always positive.
pub type Rational = BigRational;

/// Shorthand constructor for small literals.
///
/// # Panics
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer shorthand.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` with optional sign, rejecting a zero denominator.
pub fn rational_from_str(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(s.to_string());
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num_s).map_err(|_| bad())?;
    let den = BigInt::from_str(den_s).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Formats as `"p"` for integers and `"p/q"` otherwise; inverse of
/// [`rational_from_str`] on canonical output.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
