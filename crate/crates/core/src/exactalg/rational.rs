//! Rationals and square classes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::ExactError;

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Parses `"n/d"` or `"n"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    let bad = || ExactError::Parse(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Square class of a nonzero rational, represented by the unique signed squarefree integer in it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass(BigInt);

impl SquareClass {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_one()
    }

    /// Class of the product.
    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        squarefree_part(&Rational::from_integer(&self.0 * &other.0))
            .expect("product of nonzero classes is nonzero")
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for SquareClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

/// Squarefree integer `s` with `r / s` a rational square.
pub fn squarefree_part(r: &Rational) -> Result<SquareClass, ExactError> {
    if r.is_zero() {
        return Err(ExactError::ZeroInput);
    }
    // n/d and n*d differ by the square d^2
    let m = r.numer() * r.denom();
    let sign = if m.is_negative() { -BigInt::one() } else { BigInt::one() };
    Ok(SquareClass(sign * squarefree_kernel(m.abs())))
}

fn squarefree_kernel(mut m: BigInt) -> BigInt {
    let mut out = BigInt::one();
    let two = BigInt::from(2);
    let mut d = two.clone();
    while &d * &d <= m {
        let mut e = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &d;
        }
        d += if d == two { BigInt::one() } else { two.clone() };
    }
    out * m
}

/// Exact rational square root, if `r` is the square of a rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = exact_isqrt(r.numer())?;
    let d = exact_isqrt(r.denom())?;
    Some(Rational::new(n, d))
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Exponentiation by a nonnegative machine integer.
pub fn rat_pow(r: &Rational, e: u32) -> Rational {
    num_traits::pow(r.clone(), e as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(n: i64, d: i64) -> i64 {
        squarefree_part(&ratio(n, d)).unwrap().value().try_into().unwrap()
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(sf(8, 9), 2);
        assert_eq!(sf(-3, 1), -3);
        assert_eq!(sf(30, 1), 30);
        assert_eq!(sf(-12, 1), -3);
        assert_eq!(sf(5, 4), 5);
        assert_eq!(sf(1, 50), 2);
        assert_eq!(sf(49, 1), 1);
    }

    #[test]
    fn squarefree_rejects_zero() {
        assert_eq!(squarefree_part(&rat(0)), Err(ExactError::ZeroInput));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational(" -6/4 ").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(fmt_rational(&ratio(6, -4)), "-3/2");
    }

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&ratio(2, 1)), None);
        assert_eq!(rational_sqrt(&ratio(-4, 1)), None);
    }
}
