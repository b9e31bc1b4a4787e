//! Exact scalars. Every coordinate in the crate is a [`Rational`].

use alloc::string::String;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::Error;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den`, reduced. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` (optional sign on `p`, `q != 0`).
pub fn parse(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| Error::ParseRational)?;
    let den: BigInt = den.parse().map_err(|_| Error::ParseRational)?;
    if den.is_zero() {
        return Err(Error::ParseRational);
    }
    Ok(Rational::new(num, den))
}

pub fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

pub fn ceil(r: &Rational) -> BigInt {
    -((-r.numer()).div_floor(r.denom()))
}

/// Decimal rendering with exactly `places` digits after the point, rounded
/// half away from zero. Deterministic and platform independent.
pub fn to_fixed(r: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = r.abs() * Rational::from_integer(scale.clone());
    let rounded = (scaled + ratio(1, 2)).floor().to_integer();
    let (whole, frac) = rounded.div_rem(&scale);
    let mut out = String::new();
    if r.is_negative() && !rounded.is_zero() {
        out.push('-');
    }
    let _ = write!(out, "{whole}");
    if places > 0 {
        let digits = alloc::format!("{frac}");
        out.push('.');
        for _ in digits.len()..places as usize {
            out.push('0');
        }
        out.push_str(&digits);
    }
    out
}
