//! Exact scalars: rationals, extended to Gaussian rationals for complex algebras.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::CliffError;

pub type Rational = Ratio<i64>;

/// A Gaussian rational `re + im·i`. Real algebras only ever produce `im = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub const fn from_ratio(re: Rational) -> Self {
        Scalar { re, im: Rational::new_raw(0, 1) }
    }

    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn int(v: i64) -> Self {
        Scalar::from_ratio(Rational::from_integer(v))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Scalar::from_ratio(Rational::new(n, d))
    }

    pub fn zero() -> Self {
        Scalar::int(0)
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re, im: -self.im }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Scalar::from_ratio(self.re.recip()));
        }
        let norm = self.re * self.re + self.im * self.im;
        Some(Scalar { re: self.re / norm, im: -self.im / norm })
    }

    pub fn div(&self, rhs: &Scalar) -> Option<Self> {
        rhs.inv().map(|r| *self * r)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        if k == 1 {
            return *self;
        }
        if k == -1 {
            return -*self;
        }
        Scalar { re: self.re * k, im: self.im * k }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl From<Rational> for Scalar {
    fn from(v: Rational) -> Self {
        Scalar::from_ratio(v)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::from_ratio(self.re + rhs.re);
        }
        Scalar { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::from_ratio(self.re * rhs.re);
        }
        Scalar {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = *self - rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = *self * rhs;
    }
}

fn fmt_ratio(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_ratio(&self.re, f);
        }
        if self.re.is_zero() {
            if self.im.is_one() {
                return write!(f, "i");
            }
            if (-self.im).is_one() {
                return write!(f, "-i");
            }
            fmt_ratio(&self.im, f)?;
            return write!(f, "i");
        }
        write!(f, "(")?;
        fmt_ratio(&self.re, f)?;
        write!(f, "{}", if self.im.is_negative() { "-" } else { "+" })?;
        let mag = self.im.abs();
        if !mag.is_one() {
            fmt_ratio(&mag, f)?;
        }
        write!(f, "i)")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_ratio(s: &str) -> Result<Rational, CliffError> {
    let bad = || CliffError::Parse(format!("invalid rational `{s}`"));
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => s.parse::<i64>().map(Rational::from_integer).map_err(|_| bad()),
    }
}

/// Parses the imaginary part of a literal ending in `i` (`i`, `-i`, `3/4i`).
fn parse_imag(s: &str) -> Result<Rational, CliffError> {
    let body = s.strip_suffix('i').unwrap_or(s);
    match body.trim() {
        "" | "+" => Ok(Rational::one()),
        "-" => Ok(-Rational::one()),
        other => parse_ratio(other),
    }
}

impl FromStr for Scalar {
    type Err = CliffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if !t.ends_with('i') {
            return Ok(Scalar::from_ratio(parse_ratio(t)?));
        }
        // Split at the last sign that is not the leading one.
        let split = t
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => Ok(Scalar::new(parse_ratio(&t[..i])?, parse_imag(&t[i..])?)),
            None => Ok(Scalar::new(Rational::zero(), parse_imag(t)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip() {
        let cases = [
            Scalar::frac(1, 2),
            Scalar::int(-3),
            Scalar::i(),
            -Scalar::i(),
            Scalar::new(Rational::new(1, 2), Rational::new(-3, 4)),
            Scalar::new(Rational::zero(), Rational::new(5, 2)),
            Scalar::new(Rational::new(-1, 4), Rational::one()),
        ];
        for c in cases {
            let text = c.to_string();
            assert_eq!(text.parse::<Scalar>().unwrap(), c, "{text}");
        }
    }

    #[test]
    fn gaussian_inverse() {
        let z = Scalar::new(Rational::new(1, 2), Rational::new(1, 2));
        assert_eq!(z * z.inv().unwrap(), Scalar::one());
        assert!(Scalar::zero().inv().is_none());
    }
}
