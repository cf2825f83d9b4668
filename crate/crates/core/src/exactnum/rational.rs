use std::str::FromStr;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form: `"num"` for integers, `"num/den"` otherwise.
pub fn render_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| Error::parse(format!("bad rational {s:?}")))?;
    let den = BigInt::from_str(den).map_err(|_| Error::parse(format!("bad rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}
