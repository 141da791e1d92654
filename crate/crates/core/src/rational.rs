//! Arbitrary-precision rationals for the exact oracle and golden values.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// A fraction `p/q` held in lowest terms with `q > 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?} as a rational: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: &'static str,
}

impl ExactRational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!denom.is_zero(), "zero denominator");
        ExactRational(BigRational::new(numer.into(), denom))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    /// The exact value of a finite double, e.g. `0.1` becomes
    /// `3602879701896397/36028797018963968`.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(ExactRational)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        ExactRational(self.0.recip())
    }

    /// Nearest double (correctly rounded).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_big_rational(self) -> BigRational {
        self.0
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        ExactRational::from_integer(n)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Accepts integers (`7`, `-3`), fractions (`9877231/27600540`) and decimal
/// literals with an optional exponent (`0.25`, `1.5e-3`). Decimals are read as
/// the exact decimal value, not the nearest double.
impl FromStr for ExactRational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParseRationalError {
            input: s.to_string(),
            reason,
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(err("empty"));
        }
        if let Some((p, q)) = t.split_once('/') {
            let p = parse_decimal(p.trim()).ok_or_else(|| err("bad numerator"))?;
            let q = parse_decimal(q.trim()).ok_or_else(|| err("bad denominator"))?;
            if q.is_zero() {
                return Err(err("zero denominator"));
            }
            return Ok(ExactRational(p / q));
        }
        parse_decimal(t)
            .map(ExactRational)
            .ok_or_else(|| err("expected an integer, p/q or a decimal literal"))
    }
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = all_digits.parse().ok()?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Some(value)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactRational> for ExactRational {
    fn sum<I: Iterator<Item = &'a ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_the_literal_forms() {
        assert_eq!(q("7"), ExactRational::from_integer(7));
        assert_eq!(q("-3/6"), ExactRational::new(-1, 2));
        assert_eq!(q("0.25"), ExactRational::new(1, 4));
        assert_eq!(q("1.5e-3"), ExactRational::new(3, 2000));
        assert_eq!(q("2E2"), ExactRational::from_integer(200));
        assert_eq!(q(" 9877231/27600540 "), ExactRational::new(9877231, 27600540));
        assert_eq!(q(".5"), ExactRational::new(1, 2));
        for bad in ["", "abc", "1/0", "1//2", "-", "1.2.3", "0x10"] {
            assert!(bad.parse::<ExactRational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn lowest_terms_and_display() {
        let r = ExactRational::new(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(ExactRational::new(8, 4).to_string(), "2");
    }

    #[test]
    fn binary_value_of_a_double_is_exact() {
        let r = ExactRational::from_f64(0.1).unwrap();
        assert_eq!(r.to_string(), "3602879701896397/36028797018963968");
        assert_eq!(r.to_f64(), 0.1);
        assert!(ExactRational::from_f64(f64::NAN).is_none());
    }

    #[test]
    fn arithmetic() {
        let a = q("3/4") + q("3/5") + q("9877231/27600540");
        assert!((a.to_f64() - 1.70786).abs() < 1e-5);
        assert_eq!(&q("1/3") * &q("3"), ExactRational::one());
        assert_eq!(q("1/3").recip(), q("3"));
        assert_eq!(
            [q("1/2"), q("1/3"), q("1/6")].iter().sum::<ExactRational>(),
            ExactRational::one()
        );
    }
}
