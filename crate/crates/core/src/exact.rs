//! Exact rational helpers: decimal rendering and string serialization.
//!
//! All verdicts are decided on [`BigRational`]; floats and decimal strings
//! only exist for display.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serializer;

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `p/q`, or just `p` for integers.
pub fn fraction_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Rounds to `digits` fractional digits (half to even), then trims trailing
/// zeros while keeping at least one fractional digit: `1 → "1.0"`,
/// `1/2 → "0.5"`, `35/29 → "1.206897"`.
pub fn render_decimal(q: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let negative = q.is_negative();
    let scaled_num = q.numer().abs() * &scale;
    let den = q.denom();
    let (mut quot, rem) = scaled_num.div_rem(den);
    let twice = &rem * 2u32;
    if twice > *den || (twice == *den && quot.is_odd()) {
        quot += 1u32;
    }

    let digits_str = quot.to_str_radix(10);
    let (int_part, frac_part) = if digits == 0 {
        (digits_str, String::new())
    } else if digits_str.len() > digits {
        let split = digits_str.len() - digits;
        (digits_str[..split].to_string(), digits_str[split..].to_string())
    } else {
        ("0".to_string(), format!("{:0>width$}", digits_str, width = digits))
    };
    let mut frac = frac_part.trim_end_matches('0').to_string();
    if frac.is_empty() {
        frac.push('0');
    }
    let sign = if negative && !quot.is_zero() { "-" } else { "" };
    format!("{sign}{int_part}.{frac}")
}

/// Number of fractional digits in a published decimal string such as
/// `"1.2069"`.
pub fn fractional_digits(published: &str) -> usize {
    published.split_once('.').map_or(0, |(_, frac)| frac.len())
}

/// Renders `q` with the same number of fractional digits as `published`.
pub fn render_like(q: &BigRational, published: &str) -> String {
    render_decimal(q, fractional_digits(published))
}

pub(crate) fn ser_display<T: std::fmt::Display, S: Serializer>(
    value: &T,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub(crate) fn ser_ratio<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fraction_string(q))
}

pub(crate) fn ser_ratios<S: Serializer>(qs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(fraction_string))
}

pub(crate) fn ser_bigint<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    // Vertex counts fit comfortably in u64 for anything a caller can build;
    // fall back to a string otherwise.
    match (n.sign(), n.to_u64()) {
        (Sign::Minus, _) | (_, None) => s.serialize_str(&n.to_string()),
        (_, Some(v)) => s.serialize_u64(v),
    }
}

pub(crate) fn ser_bigints<S: Serializer>(ns: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ns.iter().map(|n| n.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_but_keeps_one_digit() {
        assert_eq!(render_decimal(&integer(1), 6), "1.0");
        assert_eq!(render_decimal(&rational(1, 2), 6), "0.5");
        assert_eq!(render_decimal(&rational(112, 241), 6), "0.46473");
        assert_eq!(render_decimal(&rational(3, 7), 6), "0.428571");
    }

    #[test]
    fn half_to_even() {
        assert_eq!(render_decimal(&rational(1, 8), 2), "0.12");
        assert_eq!(render_decimal(&rational(3, 8), 2), "0.38");
        assert_eq!(render_decimal(&rational(5, 2), 0), "2.0");
        assert_eq!(render_decimal(&rational(7, 2), 0), "4.0");
        assert_eq!(render_decimal(&rational(-1, 8), 2), "-0.12");
        assert_eq!(render_decimal(&rational(-1, 1000), 2), "0.0");
    }

    #[test]
    fn published_digit_counts() {
        assert_eq!(render_like(&rational(35, 29), "1.2069"), "1.2069");
        assert_eq!(render_decimal(&rational(35, 29), 6), "1.206897");
        assert_eq!(render_like(&rational(45, 38), "1.18421"), "1.18421");
        assert_eq!(render_like(&rational(31, 30), "1.03333"), "1.03333");
        assert_eq!(render_like(&integer(1), "1.0"), "1.0");
    }

    #[test]
    fn fractions() {
        assert_eq!(fraction_string(&rational(6, 4)), "3/2");
        assert_eq!(fraction_string(&integer(101)), "101");
        assert_eq!(fraction_string(&rational(-11, 3)), "-11/3");
    }
}
