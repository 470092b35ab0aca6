//! Rational scalars.
//!
//! `num-rational` keeps every value reduced with a positive denominator, which
//! is exactly the invariant needed here, so the scalar type is a plain alias.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]` (Stern-Brocot descent).
pub fn simplest_in_interval(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi, "empty interval");
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_in_interval(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let up = &fl + Rational::one();
    if &up <= hi {
        return up;
    }
    // lo and hi lie strictly inside (fl, fl + 1)
    let inner = simplest_in_interval(&(Rational::one() / (hi - &fl)), &(Rational::one() / (lo - &fl)));
    fl + Rational::one() / inner
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), rat(-7));
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(5)), "5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_in_interval(&ratio(1, 3), &ratio(1, 2)), ratio(1, 2));
        assert_eq!(simplest_in_interval(&ratio(31, 100), &ratio(34, 100)), ratio(1, 3));
        assert_eq!(simplest_in_interval(&ratio(-34, 100), &ratio(-31, 100)), ratio(-1, 3));
        assert_eq!(simplest_in_interval(&ratio(-1, 2), &ratio(3, 2)), rat(0));
        assert_eq!(simplest_in_interval(&ratio(5, 2), &ratio(5, 2)), ratio(5, 2));
        assert_eq!(simplest_in_interval(&ratio(12, 5), &ratio(13, 5)), ratio(5, 2));
    }
}
