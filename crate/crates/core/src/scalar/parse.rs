//! Text form of scalars: `p/q`, decimals, and `a+b*sqrt(d)`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ExactScalar, ScalarError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseScalarError {
    #[error("empty scalar literal")]
    Empty,
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

impl FromStr for ExactScalar {
    type Err = ParseScalarError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseScalarError::Empty);
        }
        let mut total = ExactScalar::zero();
        for term in split_terms(&compact) {
            total = total + parse_term(term)?;
        }
        Ok(total)
    }
}

/// Splits at top-level `+`/`-` signs, keeping each sign with its term.
fn split_terms(s: &str) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut terms = Vec::new();
    let mut start = 0;
    let mut depth = 0i32;
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > start => {
                // a sign right after `*` or `/` belongs to the operand
                if !matches!(bytes[i - 1], b'*' | b'/') {
                    terms.push(&s[start..i]);
                    start = i;
                }
            }
            _ => {}
        }
    }
    terms.push(&s[start..]);
    terms
}

fn parse_term(term: &str) -> Result<ExactScalar, ParseScalarError> {
    let malformed = || ParseScalarError::Malformed(term.to_string());
    let (negative, body) = match term.as_bytes().first() {
        Some(b'+') => (false, &term[1..]),
        Some(b'-') => (true, &term[1..]),
        _ => (false, term),
    };
    if body.is_empty() {
        return Err(malformed());
    }
    let value = if let Some(pos) = body.find("sqrt(") {
        if !body.ends_with(')') {
            return Err(malformed());
        }
        let radicand = parse_rational(&body[pos + 5..body.len() - 1])?;
        let root = ExactScalar::sqrt_of(&radicand)?;
        let coefficient = match &body[..pos] {
            "" => BigRational::one(),
            prefix => parse_rational(prefix.strip_suffix('*').ok_or_else(malformed)?)?,
        };
        ExactScalar::Rational(coefficient) * root
    } else {
        ExactScalar::Rational(parse_rational(body)?)
    };
    Ok(if negative { -value } else { value })
}

fn parse_rational(text: &str) -> Result<BigRational, ParseScalarError> {
    let malformed = || ParseScalarError::Malformed(text.to_string());
    if let Some((n, d)) = text.split_once('/') {
        let numer = parse_decimal(n).ok_or_else(malformed)?;
        let denom = parse_decimal(d).ok_or_else(malformed)?;
        if denom.is_zero() {
            return Err(ParseScalarError::ZeroDenominator(text.to_string()));
        }
        Ok(numer / denom)
    } else {
        parse_decimal(text).ok_or_else(malformed)
    }
}

/// Integer or finite decimal literal, read exactly.
fn parse_decimal(text: &str) -> Option<BigRational> {
    let (negative, digits) = match text.as_bytes().first()? {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut all = String::with_capacity(int_part.len() + frac_part.len());
    all.push_str(int_part);
    all.push_str(frac_part);
    let numer: BigInt = all.parse().ok()?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    let value = BigRational::new(numer, denom);
    Some(if negative { -value } else { value })
}

fn write_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

pub(super) fn write_scalar(x: &ExactScalar, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match x {
        ExactScalar::Rational(r) => write_rational(r, f),
        ExactScalar::Quad(q) => {
            let a = q.rational_part();
            let b = q.radical_coefficient();
            if !a.is_zero() {
                write_rational(a, f)?;
                f.write_str(if b.is_negative() { "-" } else { "+" })?;
            } else if b.is_negative() {
                f.write_str("-")?;
            }
            let magnitude = b.abs();
            if !magnitude.is_one() {
                write_rational(&magnitude, f)?;
                f.write_str("*")?;
            }
            write!(f, "sqrt({})", q.radicand())
        }
        ExactScalar::Real(x) => {
            let iv = x.enclosure();
            write!(f, "[{:e},{:e}]", iv.lo_f64(), iv.hi_f64())
        }
    }
}
