//! The commutative bicomplex ring over a generic scalar ring.
//!
//! An element is `w + x*i + y*j + z*k` with unit relations
//!
//! ```text
//! i^2 = -1    j^2 = -1    k^2 = +1
//! ij = ji = k    jk = kj = -i    ik = ki = -j
//! ```
//!
//! so `k = ij` and the ring is commutative (unlike the quaternions). It has
//! zero divisors: `(1 + k)(1 - k) = 0`. Three conjugations negate the units
//! fixed by the complementary axis; each is a ring automorphism and an
//! involution, and composing any two gives the third.

use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Scalar rings the bicomplex construction works over. Blanket-implemented;
/// satisfied by `BigInt`, [`crate::QuadElem`], and the primitive signed
/// integers.
pub trait Scalar:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

/// Bicomplex number `w + x*i + y*j + z*k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bicomplex<S> {
    pub w: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

/// The three conjugation axes: [`Axis::I`] negates `i` and `k`, [`Axis::J`]
/// negates `j` and `k`, [`Axis::K`] negates `i` and `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    I,
    J,
    K,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::I, Axis::J, Axis::K];
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::I => write!(f, "I"),
            Axis::J => write!(f, "J"),
            Axis::K => write!(f, "K"),
        }
    }
}

/// A bicomplex number viewed as a pair of `C(i)` components along `j`:
/// `(z1_re + z1_im*i) + (z2_re + z2_im*i)*j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexPair<S> {
    pub z1_re: S,
    pub z1_im: S,
    pub z2_re: S,
    pub z2_im: S,
}

impl<S: Scalar> Bicomplex<S> {
    pub fn new(w: S, x: S, y: S, z: S) -> Self {
        Bicomplex { w, x, y, z }
    }

    pub fn from_scalar(w: S) -> Self {
        Bicomplex { w, x: S::zero(), y: S::zero(), z: S::zero() }
    }

    pub fn zero() -> Self {
        Self::from_scalar(S::zero())
    }

    pub fn one() -> Self {
        Self::from_scalar(S::one())
    }

    pub fn unit_i() -> Self {
        Bicomplex { w: S::zero(), x: S::one(), y: S::zero(), z: S::zero() }
    }

    pub fn unit_j() -> Self {
        Bicomplex { w: S::zero(), x: S::zero(), y: S::one(), z: S::zero() }
    }

    pub fn unit_k() -> Self {
        Bicomplex { w: S::zero(), x: S::zero(), y: S::zero(), z: S::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// Multiply every component by `lambda`.
    pub fn scale(&self, lambda: &S) -> Self {
        Bicomplex {
            w: lambda.clone() * self.w.clone(),
            x: lambda.clone() * self.x.clone(),
            y: lambda.clone() * self.y.clone(),
            z: lambda.clone() * self.z.clone(),
        }
    }

    /// Conjugate along `axis`. All three fix the real component.
    pub fn conj(&self, axis: Axis) -> Self {
        let Bicomplex { w, x, y, z } = self.clone();
        match axis {
            Axis::I => Bicomplex { w, x: -x, y, z: -z },
            Axis::J => Bicomplex { w, x, y: -y, z: -z },
            Axis::K => Bicomplex { w, x: -x, y: -y, z },
        }
    }

    /// `self * conj(self, axis)`.
    pub fn self_product(&self, axis: Axis) -> Self {
        self * &self.conj(axis)
    }

    /// Sum of squared components `w^2 + x^2 + y^2 + z^2`. This is the
    /// composite of the three conjugations' quadratic forms, not a
    /// multiplicative norm.
    pub fn real_norm_sq(&self) -> S {
        let sq = |v: &S| v.clone() * v.clone();
        sq(&self.w) + sq(&self.x) + sq(&self.y) + sq(&self.z)
    }

    /// `self^e` by binary exponentiation. `x^0 = 1` for every `x`.
    pub fn pow(&self, e: u64) -> Self {
        let mut base = self.clone();
        let mut exp = e;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Split along `j`: `self = z1 + z2*j` with `z1, z2` in `C(i)`.
    pub fn to_complex_pair(&self) -> ComplexPair<S> {
        ComplexPair {
            z1_re: self.w.clone(),
            z1_im: self.x.clone(),
            z2_re: self.y.clone(),
            z2_im: self.z.clone(),
        }
    }

    pub fn from_complex_pair(pair: &ComplexPair<S>) -> Self {
        Bicomplex {
            w: pair.z1_re.clone(),
            x: pair.z1_im.clone(),
            y: pair.z2_re.clone(),
            z: pair.z2_im.clone(),
        }
    }

    /// Apply `f` to every component.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Bicomplex<T> {
        Bicomplex { w: f(&self.w), x: f(&self.x), y: f(&self.y), z: f(&self.z) }
    }
}

impl<S: Scalar> Add for &Bicomplex<S> {
    type Output = Bicomplex<S>;

    fn add(self, rhs: &Bicomplex<S>) -> Bicomplex<S> {
        Bicomplex {
            w: self.w.clone() + rhs.w.clone(),
            x: self.x.clone() + rhs.x.clone(),
            y: self.y.clone() + rhs.y.clone(),
            z: self.z.clone() + rhs.z.clone(),
        }
    }
}

impl<S: Scalar> Sub for &Bicomplex<S> {
    type Output = Bicomplex<S>;

    fn sub(self, rhs: &Bicomplex<S>) -> Bicomplex<S> {
        Bicomplex {
            w: self.w.clone() - rhs.w.clone(),
            x: self.x.clone() - rhs.x.clone(),
            y: self.y.clone() - rhs.y.clone(),
            z: self.z.clone() - rhs.z.clone(),
        }
    }
}

impl<S: Scalar> Mul for &Bicomplex<S> {
    type Output = Bicomplex<S>;

    // Componentwise expansion of the unit table. The real part gains
    // +d1*d2 because k^2 = +1.
    fn mul(self, rhs: &Bicomplex<S>) -> Bicomplex<S> {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        let m = |u: &S, v: &S| u.clone() * v.clone();
        Bicomplex {
            w: m(a1, a2) - m(b1, b2) - m(c1, c2) + m(d1, d2),
            x: m(a1, b2) + m(b1, a2) - m(c1, d2) - m(d1, c2),
            y: m(a1, c2) + m(c1, a2) - m(b1, d2) - m(d1, b2),
            z: m(a1, d2) + m(d1, a2) + m(b1, c2) + m(c1, b2),
        }
    }
}

impl<S: Scalar> Neg for &Bicomplex<S> {
    type Output = Bicomplex<S>;

    fn neg(self) -> Bicomplex<S> {
        Bicomplex {
            w: -self.w.clone(),
            x: -self.x.clone(),
            y: -self.y.clone(),
            z: -self.z.clone(),
        }
    }
}

impl<S: Scalar> Add for Bicomplex<S> {
    type Output = Bicomplex<S>;
    fn add(self, rhs: Bicomplex<S>) -> Bicomplex<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Bicomplex<S> {
    type Output = Bicomplex<S>;
    fn sub(self, rhs: Bicomplex<S>) -> Bicomplex<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for Bicomplex<S> {
    type Output = Bicomplex<S>;
    fn mul(self, rhs: Bicomplex<S>) -> Bicomplex<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Neg for Bicomplex<S> {
    type Output = Bicomplex<S>;
    fn neg(self) -> Bicomplex<S> {
        -&self
    }
}

impl<S: fmt::Display + Signed> fmt::Display for Bicomplex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x.is_zero() && self.y.is_zero() && self.z.is_zero() {
            return write!(f, "{}", self.w);
        }
        write!(f, "{}", self.w)?;
        for (c, unit) in [(&self.x, "i"), (&self.y, "j"), (&self.z, "k")] {
            if c.is_negative() {
                write!(f, " - {}{}", c.abs(), unit)?;
            } else {
                write!(f, " + {}{}", c, unit)?;
            }
        }
        Ok(())
    }
}
