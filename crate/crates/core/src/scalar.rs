//! The coefficient ring abstraction shared by every series and solver in the crate.
//!
//! Series arithmetic, exp/log, reversion and the class operator only need a
//! commutative ring that admits multiplication by rationals. Implementations
//! exist for exact rationals, symbolic polynomials ([`crate::MPoly`]), and
//! `f32`/`f64` reals and complex numbers.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use thiserror::Error;

/// A commutative ring containing a copy of the rationals.
pub trait Coefficient:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    /// Image of a rational number in this ring.
    fn from_rational(r: &BigRational) -> Self;

    fn mul_ref(&self, other: &Self) -> Self;

    /// Multiplication by a rational scalar.
    fn scale(&self, r: &BigRational) -> Self {
        self.mul_ref(&Self::from_rational(r))
    }

    fn from_integer(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        *self += &p;
    }
}

impl Coefficient for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn scale(&self, r: &BigRational) -> Self {
        self * r
    }
}

macro_rules! float_coefficient {
    ($t:ty) => {
        impl Coefficient for $t {
            fn from_rational(r: &BigRational) -> Self {
                rational_to_f64(r) as $t
            }

            fn mul_ref(&self, other: &Self) -> Self {
                self * other
            }
        }

        impl Coefficient for Complex<$t> {
            fn from_rational(r: &BigRational) -> Self {
                Complex::new(rational_to_f64(r) as $t, 0.0)
            }

            fn mul_ref(&self, other: &Self) -> Self {
                self * other
            }
        }
    };
}

float_coefficient!(f32);
float_coefficient!(f64);

/// Nearest `f64` to a rational; huge numerators and denominators are handled
/// without overflowing to infinity when the quotient itself is representable.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Canonical `num/den` rendering; the denominator is always written.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {literal:?}: {reason}")]
pub struct ParseRationalError {
    pub literal: String,
    pub reason: &'static str,
}

/// Parses `num/den`, an integer, or a finite decimal literal such as `0.25`
/// or `-1.5` into an exact rational. No floating-point conversion happens.
pub fn parse_rational(text: &str) -> Result<BigRational, ParseRationalError> {
    let s = text.trim();
    let err = |reason| ParseRationalError {
        literal: text.to_string(),
        reason,
    };
    if s.is_empty() {
        return Err(err("empty"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| err("bad numerator"))?;
        let d = BigInt::from_str(den.trim()).map_err(|_| err("bad denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        return Ok(BigRational::new(n, d));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err("no digits"));
    }
    let all_digits = |p: &str| p.chars().all(|c| c.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(err("not a number"));
    }
    let digits = format!("{int_part}{frac_part}");
    let mantissa = BigInt::from_str(&digits).map_err(|_| err("not a number"))?;
    let scale = num_traits::pow(BigInt::from(10), frac_part.len());
    let value = BigRational::new(mantissa, scale);
    Ok(if negative { -value } else { value })
}

/// Exact square root of a nonnegative rational when both parts are perfect squares.
pub fn exact_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_integer_and_decimal_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), rational(1, 2));
        assert_eq!(parse_rational("-2").unwrap(), integer(-2));
        assert_eq!(parse_rational("0.3").unwrap(), rational(3, 10));
        assert_eq!(parse_rational("-1.25").unwrap(), rational(-5, 4));
        assert_eq!(parse_rational(".5").unwrap(), rational(1, 2));
        assert_eq!(parse_rational("7/-14").unwrap(), rational(-1, 2));
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "1/0", "abc", "1.2.3", "1e5", "-", "."] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn canonical_rendering_keeps_denominator() {
        assert_eq!(format_rational(&integer(-2)), "-2/1");
        assert_eq!(format_rational(&rational(4, -6)), "-2/3");
    }

    #[test]
    fn exact_sqrt_of_squares_only() {
        assert_eq!(exact_sqrt(&rational(4, 9)), Some(rational(2, 3)));
        assert_eq!(exact_sqrt(&rational(2, 3)), None);
        assert_eq!(exact_sqrt(&rational(-1, 4)), None);
    }

    #[test]
    fn huge_rationals_convert_without_overflow() {
        let big = num_traits::pow(BigInt::from(10), 400);
        let r = BigRational::new(&big * BigInt::from(3), &big * BigInt::from(4));
        assert_eq!(rational_to_f64(&r), 0.75);
    }
}
