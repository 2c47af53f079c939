use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Parses `p/q`, an integer, or a finite decimal such as `0.55` into an
/// exact rational in lowest terms.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let trimmed = text.trim();
    let fail = |reason: &str| Error::Parse {
        what: "rational",
        text: text.to_string(),
        reason: reason.to_string(),
    };
    if trimmed.is_empty() {
        return Err(fail("empty input"));
    }
    if let Some((numer, denom)) = trimmed.split_once('/') {
        let numer = parse_integer(numer.trim()).ok_or_else(|| fail("numerator is not an integer"))?;
        let denom = parse_integer(denom.trim()).ok_or_else(|| fail("denominator is not an integer"))?;
        if denom.is_zero() {
            return Err(Error::ZeroDenominator(text.to_string()));
        }
        if denom.is_negative() {
            return Err(fail("denominator must be positive"));
        }
        return Ok(BigRational::new(numer, denom));
    }
    if let Some((whole, frac)) = trimmed.split_once('.') {
        let negative = whole.starts_with('-');
        let unsigned = whole.trim_start_matches(['-', '+']);
        if whole.len() - unsigned.len() > 1
            || (unsigned.is_empty() && frac.is_empty())
            || !unsigned.chars().all(|c| c.is_ascii_digit())
            || !frac.chars().all(|c| c.is_ascii_digit())
        {
            return Err(fail("malformed decimal"));
        }
        let digits = format!("{unsigned}{frac}");
        let magnitude: BigInt = digits.parse().map_err(|_| fail("malformed decimal"))?;
        let scale = num_traits::pow(BigInt::from(10u8), frac.len());
        let numer = if negative { -magnitude } else { magnitude };
        return Ok(BigRational::new(numer, scale));
    }
    parse_integer(trimmed)
        .map(BigRational::from_integer)
        .ok_or_else(|| fail("expected p/q, an integer, or a finite decimal"))
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// Renders as `p/q` in lowest terms, always with an explicit denominator.
pub fn render_rational(value: &BigRational) -> String {
    let denom = if value.denom().is_one() {
        BigInt::one()
    } else {
        value.denom().clone()
    };
    format!("{}/{}", value.numer(), denom)
}
