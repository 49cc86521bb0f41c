//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`: numerator and denominator are
//! arbitrary precision, the denominator is kept positive and the pair is
//! always reduced, with zero stored as `0/1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num / den` reduced. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rat: zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// `Some(k)` when `value` is the integer `k <= 0`.
pub fn as_nonpositive_integer(value: &Rational) -> Option<u64> {
    if value.is_integer() && !value.is_positive() {
        (-value.to_integer()).to_u64()
    } else {
        None
    }
}

/// Canonical text form: `"p/q"` in lowest terms, `"p"` for integers.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`. Zero denominators, whitespace and
/// anything else non-numeric are rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let invalid = |why: &str| Error::parse(format!("rational {text:?}"), why.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let parse_int = |s: &str, allow_sign: bool| -> Result<BigInt> {
        let digits = if allow_sign {
            s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s)
        } else {
            s
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid("expected an integer or p/q"));
        }
        s.parse::<BigInt>().map_err(|_| invalid("integer overflow"))
    };
    let numer = parse_int(num, true)?;
    let denom = match den {
        Some(d) => parse_int(d, false)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(invalid("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`.
pub fn pochhammer(a: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * (a + int(i as i64)))
}

/// Generalized binomial coefficient `C(z, k)` for rational `z`.
pub fn binomial(z: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (z - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

pub fn factorial(k: u32) -> Rational {
    (1..=k).fold(Rational::one(), |acc, i| acc * int(i as i64))
}
