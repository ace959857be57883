//! Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.
//!
//! Both parts are `BigRational`, which normalizes to lowest terms with a
//! positive denominator on construction, so derived equality is structural.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarFormatError {
    #[error("empty scalar literal")]
    Empty,
    #[error("malformed scalar literal {0:?} at byte {1}")]
    Malformed(String, usize),
    #[error("zero denominator in scalar literal {0:?}")]
    ZeroDenominator(String),
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::new(
            BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|² = a² + b²`, always real and non-negative.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    /// `(-1)^k` as a scalar.
    pub fn sign(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Self::one()
        } else {
            Self::from_int(-1)
        }
    }

    /// `i^k` as a scalar.
    pub fn i_pow(k: usize) -> Self {
        match k % 4 {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => -Self::i(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Canonical rendering: `a/b` for real values, `a/b+c/d*i` or `a/b-c/d*i`
/// otherwise. Integral parts drop the `/1`; the real part is always printed.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.re, f)?;
        if !self.im.is_zero() {
            if self.im.is_positive() {
                f.write_str("+")?;
            }
            fmt_rational(&self.im, f)?;
            f.write_str("*i")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self) -> ScalarFormatError {
        ScalarFormatError::Malformed(self.src.to_string(), self.pos)
    }

    fn digits(&mut self) -> Result<BigInt, ScalarFormatError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err());
        }
        // all ASCII digits, so parsing cannot fail
        Ok(self.src[start..self.pos].parse().expect("digit run"))
    }

    /// `[-]digits[/digits]`
    fn rational(&mut self) -> Result<BigRational, ScalarFormatError> {
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let num = self.digits()?;
        let den = if self.peek() == Some(b'/') {
            self.pos += 1;
            self.digits()?
        } else {
            BigInt::one()
        };
        if den.is_zero() {
            return Err(ScalarFormatError::ZeroDenominator(self.src.to_string()));
        }
        let r = BigRational::new(num, den);
        Ok(if negative { -r } else { r })
    }

    fn imag_suffix(&mut self) -> bool {
        if self.src[self.pos..].starts_with("*i") {
            self.pos += 2;
            true
        } else {
            false
        }
    }
}

/// Grammar: `re | re "*i" | re ("+" | "-") im "*i"` where `re`/`im` are
/// `[-]n[/d]`. A `+` may be followed by a signed imaginary part, so
/// `1/2+-1/3*i` is accepted alongside the canonical `1/2-1/3*i`.
impl FromStr for GaussianRational {
    type Err = ScalarFormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ScalarFormatError::Empty);
        }
        let mut c = Cursor {
            src: s,
            bytes: s.as_bytes(),
            pos: 0,
        };
        let first = c.rational()?;
        if c.imag_suffix() {
            return if c.pos == s.len() {
                Ok(Self::new(BigRational::zero(), first))
            } else {
                Err(c.err())
            };
        }
        match c.peek() {
            None => return Ok(Self::new(first, BigRational::zero())),
            Some(b'+') => c.pos += 1,
            Some(b'-') => {}
            Some(_) => return Err(c.err()),
        }
        let im = c.rational()?;
        if !c.imag_suffix() || c.pos != s.len() {
            return Err(c.err());
        }
        Ok(Self::new(first, im))
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        Self::new(r, BigRational::zero())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self::Output {
        Self::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self::Output {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> Self::Output {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> Self::Output {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> Self::Output {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, BigRational::zero());
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: &GaussianRational) -> Self::Output {
        self * &rhs.inv().expect("division by zero Gaussian rational")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> Self::Output {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> Self::Output {
                (&self).$m(rhs)
            }
        }
        impl $tr<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> Self::Output {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: GaussianRational) {
        *self += &rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gr(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::from_parts(re, im)
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(GaussianRational::from_int(2).to_string(), "2");
        assert_eq!(GaussianRational::from_ratio(2, 4).to_string(), "1/2");
        assert_eq!(gr((1, 2), (-1, 3)).to_string(), "1/2-1/3*i");
        assert_eq!(gr((0, 1), (1, 1)).to_string(), "0+1*i");
        assert_eq!(gr((-3, 1), (2, 5)).to_string(), "-3+2/5*i");
    }

    #[test]
    fn parse_accepts_plus_minus_form() {
        let z: GaussianRational = "1/2+-1/3*i".parse().unwrap();
        assert_eq!(z, gr((1, 2), (-1, 3)));
        assert_eq!("1/2-1/3*i".parse::<GaussianRational>().unwrap(), z);
        assert_eq!("2/4".parse::<GaussianRational>().unwrap(), gr((1, 2), (0, 1)));
        assert_eq!("-1*i".parse::<GaussianRational>().unwrap(), -GaussianRational::i());
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "i", "1/", "1/0", "1+2", "1+2*j", " 1", "1 ", "--1", "1/2*i+3", "+1"] {
            assert!(bad.parse::<GaussianRational>().is_err(), "{bad:?}");
        }
        assert!(matches!(
            "3/0".parse::<GaussianRational>(),
            Err(ScalarFormatError::ZeroDenominator(_))
        ));
    }

    #[test]
    fn field_arithmetic() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
        let z = gr((3, 1), (4, 1));
        assert_eq!(&z * &z.inv().unwrap(), GaussianRational::one());
        assert_eq!(z.norm_sqr(), BigRational::from_integer(25.into()));
        assert!(GaussianRational::zero().inv().is_none());
    }

    fn arb() -> impl Strategy<Value = GaussianRational> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| gr((a, b), (c, d)))
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(z in arb()) {
            let back: GaussianRational = z.to_string().parse().unwrap();
            prop_assert_eq!(back, z);
        }

        #[test]
        fn conj_is_multiplicative(a in arb(), b in arb()) {
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }
    }
}
