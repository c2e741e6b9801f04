//! Exact rational numbers and their text form (`"p/q"` or an integer).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `1 / n!`
pub fn inverse_factorial(n: usize) -> Rational {
    let f = (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k));
    Rational::new(BigInt::one(), f)
}

/// Parses `"p/q"`, `"-p/q"` or an integer. Whitespace around the parts is ignored.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("`{s}` is not a rational literal"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let is_int = |t: &str| {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("`{s}` has a zero denominator")));
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: reduced, integer when the denominator is 1.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("2/4").unwrap(), ratio(1, 2));
        assert_eq!(format(&parse(" -6 / 3 ").unwrap()), "-2");
        assert_eq!(format(&parse("3/-9").unwrap()), "-1/3");
        assert_eq!(parse("7").unwrap(), int(7));
        assert!(parse("1.5").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("").is_err());
        assert!(parse("a/2").is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(inverse_factorial(0), one());
        assert_eq!(inverse_factorial(4), ratio(1, 24));
    }
}
