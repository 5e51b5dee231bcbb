//! Rational scalars.
//!
//! Scalars are `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator. This module adds the textual form used by
//! bundle files: `"p/q"`, with `"/1"` spelled out for integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Canonical text: reduced, positive denominator, always with a `/`.
pub fn to_canonical(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = |reason: &str| Error::Parse(format!("rational {s:?}: {reason}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// True when the string is already in canonical form.
pub fn is_canonical(s: &str) -> bool {
    match parse(s) {
        Ok(q) => to_canonical(&q) == s,
        Err(_) => false,
    }
}
