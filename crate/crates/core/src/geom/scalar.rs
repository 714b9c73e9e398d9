//! Exact rational scalars.
//!
//! All coordinates and weights are arbitrary-precision rationals. The
//! canonical text form is `a` or `a/b` with `b > 0` and `gcd(a, b) = 1`.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type ExactScalar = BigRational;

pub fn int(v: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(numer: i64, denom: i64) -> ExactScalar {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> ExactScalar {
    ExactScalar::zero()
}

pub fn one() -> ExactScalar {
    ExactScalar::one()
}

/// Canonical text form of a rational.
pub fn format_scalar(x: &ExactScalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Error from [`parse_scalar`]; `offset` is the byte offset inside the token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarParseError {
    pub offset: usize,
    pub message: &'static str,
}

impl fmt::Display for ScalarParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at offset {}", self.message, self.offset)
    }
}

impl std::error::Error for ScalarParseError {}

fn parse_digits(s: &str, base: usize) -> Result<BigInt, ScalarParseError> {
    if s.is_empty() {
        return Err(ScalarParseError {
            offset: base,
            message: "expected digits",
        });
    }
    if let Some(pos) = s.bytes().position(|b| !b.is_ascii_digit()) {
        return Err(ScalarParseError {
            offset: base + pos,
            message: "unexpected character",
        });
    }
    Ok(s.parse::<BigInt>().expect("digits only"))
}

/// Parses `a`, `-a`, `a/b` or `-a/b`. Non-reduced input is accepted and
/// normalized; a zero denominator is rejected.
pub fn parse_scalar(token: &str) -> Result<ExactScalar, ScalarParseError> {
    let (negative, body, base) = match token.strip_prefix('-') {
        Some(rest) => (true, rest, 1),
        None => (false, token, 0),
    };
    let (numer, denom) = match body.split_once('/') {
        Some((n, d)) => {
            let numer = parse_digits(n, base)?;
            let dbase = base + n.len() + 1;
            let denom = parse_digits(d, dbase)?;
            if denom.is_zero() {
                return Err(ScalarParseError {
                    offset: dbase,
                    message: "zero denominator",
                });
            }
            (numer, denom)
        }
        None => (parse_digits(body, base)?, BigInt::one()),
    };
    let numer = if negative { -numer } else { numer };
    Ok(BigRational::new(numer, denom))
}

/// Floor of a rational as an integer.
pub fn floor_int(x: &ExactScalar) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// Ceiling of a rational as an integer.
pub fn ceil_int(x: &ExactScalar) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

/// Converts an integer-valued scalar to `i64`, if it is one and fits.
pub fn to_i64(x: &ExactScalar) -> Option<i64> {
    use num::ToPrimitive;
    if x.denom().is_one() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn to_f64(x: &ExactScalar) -> f64 {
    use num::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn abs(x: &ExactScalar) -> ExactScalar {
    x.abs()
}
