//! Exact rational arithmetic and the real quadratic field `Q(sqrt 5)`.
//!
//! [`Rational`] is an arbitrary-precision rational kept in canonical form
//! (reduced, positive denominator). [`QuadElem`] is an element `p + q*sqrt(5)`
//! with rational coordinates; the golden ratio and its conjugate live here,
//! so Binet-style formulas can be evaluated without any floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactNumError {
    /// Zero has no inverse, so `0^e` is undefined for `e < 0`.
    #[error("zero cannot be raised to the negative power {0}")]
    ZeroToNegativePower(i64),
}

/// Element `p + q*sqrt(5)` of the field `Q(sqrt 5)`.
///
/// Coordinates are uniquely determined because `sqrt(5)` is irrational, so
/// derived equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub p: Rational,
    pub q: Rational,
}

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl QuadElem {
    pub fn new(p: Rational, q: Rational) -> Self {
        QuadElem { p, q }
    }

    /// The rational `p` embedded as `p + 0*sqrt(5)`.
    pub fn from_rational(p: Rational) -> Self {
        QuadElem { p, q: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    /// `sqrt(5)` itself.
    pub fn sqrt5() -> Self {
        QuadElem { p: Rational::zero(), q: Rational::one() }
    }

    /// The golden ratio `alpha = (1 + sqrt 5)/2`, the root of `x^2 = x + 1`
    /// with positive `sqrt(5)` coordinate.
    pub fn alpha() -> Self {
        QuadElem { p: rat(1, 2), q: rat(1, 2) }
    }

    /// The conjugate root `beta = (1 - sqrt 5)/2`. Satisfies
    /// `alpha + beta = 1` and `alpha * beta = -1`.
    pub fn beta() -> Self {
        QuadElem { p: rat(1, 2), q: rat(-1, 2) }
    }

    /// Field conjugate `p - q*sqrt(5)` (the image of `sqrt 5 -> -sqrt 5`).
    pub fn conjugate(&self) -> Self {
        QuadElem { p: self.p.clone(), q: -self.q.clone() }
    }

    /// Field norm `p^2 - 5 q^2`, the product of the element with its
    /// conjugate. Zero exactly when the element is zero.
    pub fn norm(&self) -> Rational {
        &self.p * &self.p - Rational::from_integer(BigInt::from(5)) * &self.q * &self.q
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(QuadElem { p: &self.p / &n, q: -(&self.q / &n) })
    }

    /// `self^e` for any signed exponent. `x^0 = 1` for every `x` including
    /// zero; negative exponents invert first and fail only for zero.
    pub fn pow(&self, e: i64) -> Result<Self, ExactNumError> {
        if e == 0 {
            return Ok(Self::one());
        }
        if self.is_zero() {
            return if e > 0 {
                Ok(Self::zero())
            } else {
                Err(ExactNumError::ZeroToNegativePower(e))
            };
        }
        let base = if e < 0 { self.inv().expect("nonzero element") } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut base = base;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// The value as a plain integer, if it is one (`q = 0` and `p` integral).
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.q.is_zero() && self.p.is_integer() {
            Some(self.p.to_integer())
        } else {
            None
        }
    }
}

impl Zero for QuadElem {
    fn zero() -> Self {
        QuadElem { p: Rational::zero(), q: Rational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
}

impl One for QuadElem {
    fn one() -> Self {
        QuadElem { p: Rational::one(), q: Rational::zero() }
    }
}

impl Add for &QuadElem {
    type Output = QuadElem;

    fn add(self, rhs: &QuadElem) -> QuadElem {
        QuadElem { p: &self.p + &rhs.p, q: &self.q + &rhs.q }
    }
}

impl Sub for &QuadElem {
    type Output = QuadElem;

    fn sub(self, rhs: &QuadElem) -> QuadElem {
        QuadElem { p: &self.p - &rhs.p, q: &self.q - &rhs.q }
    }
}

impl Mul for &QuadElem {
    type Output = QuadElem;

    // (p1 + q1 s)(p2 + q2 s) = (p1 p2 + 5 q1 q2) + (p1 q2 + q1 p2) s,  s^2 = 5.
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        let five = Rational::from_integer(BigInt::from(5));
        QuadElem {
            p: &self.p * &rhs.p + five * &self.q * &rhs.q,
            q: &self.p * &rhs.q + &self.q * &rhs.p,
        }
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;

    fn neg(self) -> QuadElem {
        QuadElem { p: -self.p.clone(), q: -self.q.clone() }
    }
}

impl Add for QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: QuadElem) -> QuadElem {
        &self + &rhs
    }
}

impl Sub for QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: QuadElem) -> QuadElem {
        &self - &rhs
    }
}

impl Mul for QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: QuadElem) -> QuadElem {
        &self * &rhs
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        -&self
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        if self.q.is_negative() {
            write!(f, "{} - {}*sqrt(5)", self.p, -self.q.clone())
        } else {
            write!(f, "{} + {}*sqrt(5)", self.p, self.q)
        }
    }
}
