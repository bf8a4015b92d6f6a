//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the
//! canonical form this crate relies on: the denominator is positive, the
//! fraction is fully reduced, and zero is represented as 0/1. Equality of
//! values therefore coincides with structural equality.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// Builds n/d. Panics if `d == 0`; intended for literals in code and tests.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form: "p/q" when q ≠ 1, plain "p" otherwise.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

/// Parses "p/q" or "p" with an optional leading sign.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Json(format!("invalid rational literal: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Json(format!("zero denominator in rational: {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// True when `r` is an integer (denominator 1).
pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

/// The integer value of `r`, if it is one.
pub fn to_bigint(r: &Rational) -> Option<BigInt> {
    if r.is_integer() {
        Some(r.numer().clone())
    } else {
        None
    }
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    to_bigint(r).and_then(|b| b.to_i64())
}

pub fn abs(r: &Rational) -> Rational {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_reduced_with_positive_denominator() {
        let r = rat(4, -6);
        assert_eq!(r, rat(-2, 3));
        assert_eq!(rational_to_string(&r), "-2/3");
        assert_eq!(rational_to_string(&rat(14, 7)), "2");
        assert_eq!(rational_to_string(&rat(0, 5)), "0");
    }

    #[test]
    fn parsing_round_trips() {
        for s in ["3/2", "-7", "0", "22/7", "-5/9"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(rational_to_string(&r), s);
        }
        assert_eq!(parse_rational(" 4/6 ").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn integer_detection() {
        assert_eq!(to_i64(&rat(6, 3)), Some(2));
        assert_eq!(to_i64(&rat(1, 2)), None);
    }
}
