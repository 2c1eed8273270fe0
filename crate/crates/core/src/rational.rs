//! Helpers around `BigRational`: construction, parsing and decimal display.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

pub fn int(p: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(p.into())
}

/// Accepts `p/q`, an integer, or a finite decimal such as `0.25`.
pub fn parse(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParameter(format!("not a rational number: '{s}'"));
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: BigInt = match whole {
            "" | "-" | "+" => BigInt::zero(),
            w => w.parse().map_err(|_| bad())?,
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let mag = whole.abs() * &scale + frac;
        let num = if negative { -mag } else { mag };
        return Ok(BigRational::new(num, scale));
    }
    Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?))
}

/// Decimal expansion rounded half away from zero to `places` fractional digits.
pub fn to_decimal(x: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = x.numer().abs() * &scale;
    let (q, r) = scaled.div_rem(x.denom());
    let rounded = if r * 2u32 >= *x.denom() { q + 1u32 } else { q };
    let digits = rounded.to_str_radix(10);
    let body = if places == 0 {
        digits
    } else {
        let padded = format!("{:0>width$}", digits, width = places + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - places);
        format!("{int_part}.{frac_part}")
    };
    if x.is_negative() && body.bytes().any(|b| b != b'0' && b != b'.') {
        format!("-{body}")
    } else {
        body
    }
}

/// Number of decimal digits of |n| (1 for zero).
pub fn decimal_digits(n: &BigInt) -> usize {
    if n.sign() == Sign::NoSign {
        1
    } else {
        n.magnitude().to_str_radix(10).len()
    }
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("20/13").unwrap(), ratio(20, 13));
        assert_eq!(parse("-4/6").unwrap(), ratio(-2, 3));
        assert_eq!(parse("7").unwrap(), ratio(7, 1));
        assert_eq!(parse("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse("-1.5").unwrap(), ratio(-3, 2));
        assert_eq!(parse(".5").unwrap(), ratio(1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
        assert!(parse("1.").is_err());
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(to_decimal(&ratio(2, 3), 4), "0.6667");
        assert_eq!(to_decimal(&ratio(-2, 3), 2), "-0.67");
        assert_eq!(to_decimal(&ratio(13, 6), 0), "2");
        assert_eq!(to_decimal(&ratio(1, 200), 2), "0.01");
        assert_eq!(to_decimal(&ratio(-1, 1000), 2), "0.00");
        assert_eq!(to_decimal(&ratio(314, 147), 3), "2.136");
    }

    #[test]
    fn digit_counts() {
        assert_eq!(decimal_digits(&BigInt::from(0)), 1);
        assert_eq!(decimal_digits(&BigInt::from(-12345)), 5);
    }

    #[test]
    fn display_is_p_over_q() {
        assert_eq!(ratio(6, 4).to_string(), "3/2");
        assert_eq!(ratio(4, 2).to_string(), "2");
    }
}
