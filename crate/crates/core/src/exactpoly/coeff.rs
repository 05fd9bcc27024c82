use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// A Gaussian rational `re + im*i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactCoeff {
    pub re: Rational,
    pub im: Rational,
}

impl ExactCoeff {
    pub fn new(re: Rational, im: Rational) -> Self {
        ExactCoeff { re, im }
    }

    pub fn real(re: Rational) -> Self {
        ExactCoeff { re, im: Rational::zero() }
    }

    pub fn imag(im: Rational) -> Self {
        ExactCoeff { re: Rational::zero(), im }
    }

    pub fn from_int(v: i64) -> Self {
        Self::real(int(v))
    }

    pub fn i() -> Self {
        Self::imag(Rational::one())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `i^k`, reduced with `i^2 = -1`.
    pub fn i_pow(k: u32) -> Self {
        match k % 4 {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => Self::imag(-Rational::one()),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        ExactCoeff { re: &self.re * r, im: &self.im * r }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if norm.is_zero() {
            return None;
        }
        Some(ExactCoeff { re: &self.re / &norm, im: -(&self.im / &norm) })
    }
}

impl Zero for ExactCoeff {
    fn zero() -> Self {
        ExactCoeff::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for ExactCoeff {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl From<Rational> for ExactCoeff {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl<'a> Add<&'a ExactCoeff> for &'a ExactCoeff {
    type Output = ExactCoeff;
    fn add(self, rhs: &ExactCoeff) -> ExactCoeff {
        ExactCoeff { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Add for ExactCoeff {
    type Output = ExactCoeff;
    fn add(self, rhs: ExactCoeff) -> ExactCoeff {
        ExactCoeff { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<'a> Sub<&'a ExactCoeff> for &'a ExactCoeff {
    type Output = ExactCoeff;
    fn sub(self, rhs: &ExactCoeff) -> ExactCoeff {
        ExactCoeff { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl AddAssign<&ExactCoeff> for ExactCoeff {
    fn add_assign(&mut self, rhs: &ExactCoeff) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl SubAssign<&ExactCoeff> for ExactCoeff {
    fn sub_assign(&mut self, rhs: &ExactCoeff) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl<'a> Mul<&'a ExactCoeff> for &'a ExactCoeff {
    type Output = ExactCoeff;
    fn mul(self, rhs: &ExactCoeff) -> ExactCoeff {
        if self.im.is_zero() && rhs.im.is_zero() {
            return ExactCoeff::real(&self.re * &rhs.re);
        }
        ExactCoeff { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl Mul for ExactCoeff {
    type Output = ExactCoeff;
    fn mul(self, rhs: ExactCoeff) -> ExactCoeff {
        &self * &rhs
    }
}

impl Neg for ExactCoeff {
    type Output = ExactCoeff;
    fn neg(self) -> ExactCoeff {
        ExactCoeff { re: -self.re, im: -self.im }
    }
}

impl Neg for &ExactCoeff {
    type Output = ExactCoeff;
    fn neg(self) -> ExactCoeff {
        ExactCoeff { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for ExactCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}*I", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}*I", self.re, sign, self.im.abs())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_i_cycle() {
        assert_eq!(ExactCoeff::i_pow(0), ExactCoeff::one());
        assert_eq!(ExactCoeff::i_pow(2), ExactCoeff::from_int(-1));
        assert_eq!(&ExactCoeff::i() * &ExactCoeff::i(), ExactCoeff::i_pow(6));
        assert_eq!(&ExactCoeff::i_pow(3) * &ExactCoeff::i(), ExactCoeff::one());
    }

    #[test]
    fn inverse_of_gaussian_rational() {
        let z = ExactCoeff::new(int(3), int(-4));
        assert_eq!(&z * &z.inv().unwrap(), ExactCoeff::one());
        assert!(ExactCoeff::zero().inv().is_none());
    }

    #[test]
    fn rationals_parse_in_both_forms() {
        assert_eq!(parse_rational("-6/8").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
