//! Bicomplex Fibonacci and Lucas numbers.
//!
//! `BF_n = F_n + F_{n+1} i + F_{n+2} j + F_{n+3} k` packages four consecutive
//! Fibonacci numbers as one bicomplex value, and `BL_n` does the same with
//! Lucas numbers. Both satisfy the Fibonacci recurrence componentwise, at all
//! signed indices. Their closed Binet forms live over `Q(sqrt 5)`:
//!
//! ```text
//! BF_n = (abar * alpha^n - bbar * beta^n) / sqrt(5)
//! BL_n =  abar * alpha^n + bbar * beta^n
//! ```
//!
//! with `abar = 1 + alpha i + alpha^2 j + alpha^3 k` and `bbar` its `beta`
//! analogue. The forms are exact symbolic values whose components reduce to
//! integers.

use crate::bicomplex::{Axis, Bicomplex};
use crate::exactnum::QuadElem;
use crate::sequences::{signed_fib_pair, SequenceIndex};
use num_bigint::BigInt;
use num_traits::One;

/// `BF_n`: consecutive Fibonacci numbers `(F_n, F_{n+1}, F_{n+2}, F_{n+3})`
/// as a bicomplex value.
pub fn bf(n: SequenceIndex) -> Bicomplex<BigInt> {
    let (f0, f1) = signed_fib_pair(n);
    let f2 = &f0 + &f1;
    let f3 = &f1 + &f2;
    Bicomplex::new(f0, f1, f2, f3)
}

/// `BL_n`: consecutive Lucas numbers `(L_n, L_{n+1}, L_{n+2}, L_{n+3})`
/// as a bicomplex value.
pub fn bl(n: SequenceIndex) -> Bicomplex<BigInt> {
    let (f, g) = signed_fib_pair(n);
    let l0 = (&g << 1) - &f; // L_n = 2 F_{n+1} - F_n
    let l1 = (&f << 1) + &g; // L_{n+1} = 2 F_{n+2} - F_{n+1}
    let l2 = &l0 + &l1;
    let l3 = &l1 + &l2;
    Bicomplex::new(l0, l1, l2, l3)
}

/// `conj(BF_n, axis)`.
pub fn bf_conj(axis: Axis, n: SequenceIndex) -> Bicomplex<BigInt> {
    bf(n).conj(axis)
}

/// `F_n^2 + F_{n+1}^2 + F_{n+2}^2 + F_{n+3}^2`, the radicand of the real
/// modulus `|BF_n|` built from the three conjugation quadratic forms.
pub fn bf_real_radicand(n: SequenceIndex) -> BigInt {
    bf(n).real_norm_sq()
}

/// The constants appearing in the Binet forms, computed once.
#[derive(Clone, Debug)]
pub struct BinetConstants {
    pub alpha: QuadElem,
    pub beta: QuadElem,
    pub alpha_bar: Bicomplex<QuadElem>,
    pub beta_bar: Bicomplex<QuadElem>,
    pub sqrt5: QuadElem,
}

impl BinetConstants {
    pub fn new() -> Self {
        let alpha = QuadElem::alpha();
        let beta = QuadElem::beta();
        let bar = |r: &QuadElem| {
            let r2 = r * r;
            let r3 = &r2 * r;
            Bicomplex::new(QuadElem::one(), r.clone(), r2, r3)
        };
        BinetConstants {
            alpha_bar: bar(&alpha),
            beta_bar: bar(&beta),
            alpha,
            beta,
            sqrt5: QuadElem::sqrt5(),
        }
    }

    /// Binet form of `BF_n`, exact over `Q(sqrt 5)`.
    pub fn bf(&self, n: SequenceIndex) -> Bicomplex<QuadElem> {
        let an = self.alpha.pow(n).expect("alpha is nonzero");
        let bn = self.beta.pow(n).expect("beta is nonzero");
        let num = &self.alpha_bar.scale(&an) - &self.beta_bar.scale(&bn);
        num.scale(&self.sqrt5.inv().expect("sqrt 5 is nonzero"))
    }

    /// Binet form of `BL_n`, exact over `Q(sqrt 5)`.
    pub fn bl(&self, n: SequenceIndex) -> Bicomplex<QuadElem> {
        let an = self.alpha.pow(n).expect("alpha is nonzero");
        let bn = self.beta.pow(n).expect("beta is nonzero");
        &self.alpha_bar.scale(&an) + &self.beta_bar.scale(&bn)
    }
}

impl Default for BinetConstants {
    fn default() -> Self {
        Self::new()
    }
}

/// Binet form of `BF_n`.
pub fn bf_binet(n: SequenceIndex) -> Bicomplex<QuadElem> {
    BinetConstants::new().bf(n)
}

/// Binet form of `BL_n`.
pub fn bl_binet(n: SequenceIndex) -> Bicomplex<QuadElem> {
    BinetConstants::new().bl(n)
}

/// All four components as plain integers, if they are integers.
pub fn integer_components(x: &Bicomplex<QuadElem>) -> Option<Bicomplex<BigInt>> {
    Some(Bicomplex::new(
        x.w.to_integer()?,
        x.x.to_integer()?,
        x.y.to_integer()?,
        x.z.to_integer()?,
    ))
}
