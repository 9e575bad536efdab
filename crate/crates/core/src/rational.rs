//! Exact rationals and their canonical text form.
//!
//! The canonical form of a rational is `"n"` when the denominator is one and
//! `"n/d"` otherwise, with `d > 1` and `gcd(|n|, d) = 1`. Parsing accepts only
//! canonical strings so that text round-trips byte for byte.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_canonical_string(q: &Rational) -> String {
    // `Ratio` keeps itself reduced with a positive denominator.
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        let mut s = q.numer().to_string();
        s.push('/');
        s.push_str(&q.denom().to_string());
        s
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if s.starts_with('-') && digits == "0" {
        return None;
    }
    s.parse().ok()
}

/// Parses a canonical fraction string.
pub fn parse_canonical(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(alloc::format!("not a canonical fraction: {s:?}"));
    match s.split_once('/') {
        None => parse_int(s).map(Rational::from_integer).ok_or_else(bad),
        Some((n, d)) => {
            let n = parse_int(n).ok_or_else(bad)?;
            let d = parse_int(d).ok_or_else(bad)?;
            if !d.is_positive() || d.is_one() || !n.gcd(&d).is_one() {
                return Err(bad());
            }
            Ok(Rational::new_raw(n, d))
        }
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Least common multiple of the denominators (1 for an empty input).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn sign(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
