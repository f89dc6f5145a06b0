//! Exact rational scalars and their `p/q` text form.
//!
//! Every correctness-bearing value in this crate is a [`Rat`]. Floating point
//! never enters a computation path; it may only appear in display helpers.

use num::bigint::BigInt;
use num::BigRational;
use thiserror::Error;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// Shorthand constructor for small literals in tests, demos and fixtures.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rat(text: &str) -> Result<Rat, RationalParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let bad = || RationalParseError::Invalid(text.to_owned());
    let (num_str, den_str) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num_str.parse().map_err(|_| bad())?;
    let den: BigInt = den_str.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(RationalParseError::ZeroDenominator(text.to_owned()));
    }
    Ok(Rat::new(num, den))
}

/// Canonical text form: `"p/q"`, or `"p"` when the value is an integer.
pub fn format_rat(value: &Rat) -> String {
    value.to_string()
}
