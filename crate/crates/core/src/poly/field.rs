//! Coefficient fields: the rationals and the Gaussian rationals `Q(i)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer rational `n`.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// A commutative field of exact coefficients.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + 'static
{
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn from_rational(q: Rational) -> Self;

    /// The square root of -1 when the field contains one.
    fn imaginary_unit() -> Option<Self> {
        None
    }

    /// True if the printed form should carry a leading minus sign.
    fn prints_negative(&self) -> bool;

    /// Writes the coefficient so that it can be used as a factor, i.e.
    /// parenthesised if it is a sum.
    fn write_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl Field for Rational {
    fn inv(&self) -> Self {
        self.recip()
    }

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn prints_negative(&self) -> bool {
        self.is_negative()
    }

    fn write_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A Gaussian rational `re + i*im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Gaussian { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        Gaussian { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write_imag(f, &self.im),
            (false, false) => {
                write!(f, "{}", self.re)?;
                if self.im.is_negative() {
                    write!(f, "-")?;
                    write_imag(f, &-self.im.clone())
                } else {
                    write!(f, "+")?;
                    write_imag(f, &self.im)
                }
            }
        }
    }
}

fn write_imag(f: &mut fmt::Formatter<'_>, im: &Rational) -> fmt::Result {
    if im.is_one() {
        write!(f, "I")
    } else if *im == -Rational::one() {
        write!(f, "-I")
    } else {
        write!(f, "{}*I", im)
    }
}

impl Zero for Gaussian {
    fn zero() -> Self {
        Gaussian { re: Rational::zero(), im: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gaussian {
    fn one() -> Self {
        Gaussian { re: Rational::one(), im: Rational::zero() }
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, o: Gaussian) -> Gaussian {
        Gaussian { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, o: Gaussian) -> Gaussian {
        Gaussian { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, o: Gaussian) -> Gaussian {
        Gaussian {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Div for Gaussian {
    type Output = Gaussian;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Gaussian) -> Gaussian {
        self * o.inv()
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian { re: -self.re, im: -self.im }
    }
}

impl Field for Gaussian {
    fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "inverse of zero");
        Gaussian { re: &self.re / &n, im: -(&self.im / &n) }
    }

    fn from_rational(q: Rational) -> Self {
        Gaussian::real(q)
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Gaussian::i())
    }

    fn prints_negative(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_negative()
        } else {
            self.im.is_zero() && self.re.is_negative()
        }
    }

    fn write_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.re.is_zero() && !self.im.is_zero() {
            write!(f, "({})", self)
        } else {
            write!(f, "{}", self)
        }
    }
}
