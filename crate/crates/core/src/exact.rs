//! Text form of exact values: `"num/den"` in decimal, with the denominator
//! omitted when it is 1.

use crate::{Error, Int, Rational, Result};
use num_traits::{One, Signed, Zero};

pub fn format_int(x: &Int) -> String {
    x.to_str_radix(10)
}

pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        format_int(x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_int(s: &str) -> Result<Int> {
    let t = s.trim();
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(s.to_string()));
    }
    t.parse::<Int>().map_err(|_| Error::Parse(s.to_string()))
}

/// Parses `"p/q"` or `"p"`. The result is reduced, so non-canonical input such
/// as `"4/6"` is accepted and normalized.
pub fn parse_rational(s: &str) -> Result<Rational> {
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() || d.trim().starts_with(['-', '+']) {
                return Err(Error::Parse(s.to_string()));
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
    }
}

/// Parses a string that must already be in canonical form, rejecting any
/// other spelling of the same value.
pub fn parse_canonical(s: &str) -> Result<Rational> {
    let r = parse_rational(s)?;
    if format_rational(&r) == s {
        Ok(r)
    } else {
        Err(Error::Parse(s.to_string()))
    }
}

pub(crate) fn is_positive(x: &Int) -> bool {
    x.is_positive()
}
