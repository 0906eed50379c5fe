//! Exact rational helpers on top of [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `num/den` with the `/1` omitted for integers.
pub fn format(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"a"`, `"-a"` or `"a/b"`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `q^e` for any integer `e`; `q` must be nonzero when `e < 0`.
pub fn pow(q: &Rational, e: i64) -> Rational {
    let base = if e < 0 { q.recip() } else { q.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_and_parses() {
        assert_eq!(format(&frac(2, 4)), "1/2");
        assert_eq!(format(&frac(-6, 3)), "-2");
        assert_eq!(parse("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse("7").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow(&int(2), -3), frac(1, 8));
        assert_eq!(pow(&frac(2, 3), 2), frac(4, 9));
        assert_eq!(pow(&int(5), 0), int(1));
    }
}
