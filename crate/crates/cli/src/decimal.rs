//! Exact parsing of decimal and fraction literals.
//!
//! Input files carry numbers as text; parsing "0.33" into 33/100 (instead of
//! the nearest binary double) is what lets the rank-based pipeline treat
//! genuinely equal weighted rank sums as equal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Parse a decimal literal (optional sign, optional fraction digits,
/// optional exponent) into an exact rational.
pub fn parse_decimal(text: &str) -> Result<BigRational, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err("empty number".into());
    }
    let (sign, rest) = match trimmed.as_bytes()[0] {
        b'+' => (1, &trimmed[1..]),
        b'-' => (-1, &trimmed[1..]),
        _ => (1, trimmed),
    };
    let (mantissa_text, exponent) = match rest.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = rest[pos + 1..]
                .parse()
                .map_err(|_| format!("bad exponent in {trimmed:?}"))?;
            if exp.abs() > 9_999 {
                return Err(format!("exponent out of range in {trimmed:?}"));
            }
            (&rest[..pos], exp)
        }
        None => (rest, 0),
    };
    let (int_part, frac_part) = match mantissa_text.find('.') {
        Some(pos) => (&mantissa_text[..pos], &mantissa_text[pos + 1..]),
        None => (mantissa_text, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("no digits in {trimmed:?}"));
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(format!("not a number: {trimmed:?}"));
    }
    let digits = format!("{int_part}{frac_part}");
    let mantissa: BigInt = digits.parse().expect("digits only");
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(mantissa * ten.pow(scale as u32))
    } else {
        BigRational::new(mantissa, ten.pow((-scale) as u32))
    };
    Ok(if sign < 0 { -value } else { value })
}

/// Parse a decimal or an `a/b` fraction into an exact rational.
pub fn parse_number(text: &str) -> Result<BigRational, String> {
    match text.split_once('/') {
        Some((numerator, denominator)) => {
            let num = parse_decimal(numerator)?;
            let den = parse_decimal(denominator)?;
            if den.is_zero() {
                return Err(format!("division by zero in {text:?}"));
            }
            Ok(num / den)
        }
        None => parse_decimal(text),
    }
}

/// Nearest f64 of an exact rational.
pub fn to_f64(value: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(value).unwrap_or(f64::NAN)
}

/// Parse to both representations at once.
pub fn parse_pair(text: &str) -> Result<(f64, BigRational), String> {
    let exact = parse_number(text)?;
    Ok((to_f64(&exact), exact))
}

/// Exact rational view of an f64 (always possible for finite floats).
pub fn from_f64_exact(value: f64) -> BigRational {
    BigRational::from_float(value).expect("finite float")
}
