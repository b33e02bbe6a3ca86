//! Fibonacci and Lucas numbers at arbitrary signed indices.
//!
//! Values come from iterative fast doubling on the bit pattern of `|n|`,
//! `O(log n)` big-integer multiplications, then the reflection rules
//! `F_{-n} = (-1)^{n+1} F_n` and `L_{-n} = (-1)^n L_n`. The slow iterative
//! recurrence is kept as [`fib_pair_oracle`] so tests can cross-check the
//! doubling path against an independent computation.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Index type for all sequence functions. The full `i64` range is accepted;
/// doubling walks `|n|`'s bits, so `i64::MIN` is handled via `unsigned_abs`.
pub type SequenceIndex = i64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    /// The iterative oracle only walks forward from `F_0`.
    #[error("iterative oracle requires a nonnegative index, got {0}")]
    NegativeIndex(SequenceIndex),
}

/// `(F_n, F_{n+1})` for `n >= 0` by fast doubling, most significant bit
/// first: `F_{2m} = F_m (2 F_{m+1} - F_m)`, `F_{2m+1} = F_m^2 + F_{m+1}^2`.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    let mut f = BigInt::zero(); // F_m
    let mut g = BigInt::one(); // F_{m+1}
    if n == 0 {
        return (f, g);
    }
    let bits = 64 - n.leading_zeros() as u64;
    for i in (0..bits).rev() {
        let d = &f * ((&g << 1) - &f); // F_{2m}
        let e = &f * &f + &g * &g; // F_{2m+1}
        if (n >> i) & 1 == 1 {
            let next = &d + &e;
            f = e;
            g = next;
        } else {
            f = d;
            g = e;
        }
    }
    (f, g)
}

/// `(F_n, F_{n+1})` for any signed `n`.
pub fn signed_fib_pair(n: SequenceIndex) -> (BigInt, BigInt) {
    if n >= 0 {
        return fib_pair(n as u64);
    }
    // n = -m with m >= 1: F_{-m} = (-1)^{m+1} F_m and
    // F_{-m+1} = (-1)^m F_{m-1} with F_{m-1} = F_{m+1} - F_m.
    let m = n.unsigned_abs();
    let (fm, fm1) = fib_pair(m);
    let fm_prev = &fm1 - &fm;
    if m % 2 == 0 {
        (-fm, fm_prev)
    } else {
        (fm, -fm_prev)
    }
}

/// Fibonacci number `F_n` (`F_0 = 0`, `F_1 = 1`) for any signed `n`.
pub fn fib(n: SequenceIndex) -> BigInt {
    signed_fib_pair(n).0
}

/// Lucas number `L_n` (`L_0 = 2`, `L_1 = 1`) for any signed `n`, via
/// `L_n = 2 F_{n+1} - F_n`.
pub fn lucas(n: SequenceIndex) -> BigInt {
    let (f, g) = signed_fib_pair(n);
    (g << 1) - f
}

/// `(F_n, F_{n+1})` by the plain `O(n)` recurrence. Deliberately independent
/// of the doubling path; errors on negative indices instead of reflecting.
pub fn fib_pair_oracle(n: SequenceIndex) -> Result<(BigInt, BigInt), SequenceError> {
    if n < 0 {
        return Err(SequenceError::NegativeIndex(n));
    }
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    Ok((a, b))
}

/// `(-1)^e` as a big integer.
pub(crate) fn neg_one_pow(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn small_fibonacci_values() {
        let expected = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(fib(n as i64), b(*want), "F_{n}");
        }
    }

    #[test]
    fn small_lucas_values() {
        let expected = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(lucas(n as i64), b(*want), "L_{n}");
        }
    }

    #[test]
    fn negative_indices_alternate_sign() {
        assert_eq!(fib(-1), b(1));
        assert_eq!(fib(-2), b(-1));
        assert_eq!(fib(-3), b(2));
        assert_eq!(fib(-4), b(-3));
        assert_eq!(fib(-8), b(-21));
        assert_eq!(lucas(-1), b(-1));
        assert_eq!(lucas(-2), b(3));
        assert_eq!(lucas(-3), b(-4));
        assert_eq!(lucas(-4), b(7));
        for n in -60i64..=60 {
            assert_eq!(fib(-n), neg_one_pow(n + 1) * fib(n), "F_-{n}");
            assert_eq!(lucas(-n), neg_one_pow(n) * lucas(n), "L_-{n}");
        }
    }

    #[test]
    fn doubling_matches_iterative_oracle() {
        for n in 0..=2000i64 {
            let (f, g) = fib_pair_oracle(n).unwrap();
            assert_eq!(fib(n), f, "F_{n}");
            assert_eq!(fib(n + 1), g, "F_{}", n + 1);
        }
    }

    #[test]
    fn oracle_rejects_negative_indices() {
        assert_eq!(fib_pair_oracle(-1), Err(SequenceError::NegativeIndex(-1)));
        assert_eq!(fib_pair_oracle(0).unwrap(), (b(0), b(1)));
    }

    #[test]
    fn fib_1000_has_209_digits() {
        assert_eq!(fib(1000).to_string().len(), 209);
    }

    #[test]
    fn recurrences_hold_at_signed_indices() {
        for n in -60i64..=60 {
            assert_eq!(fib(n + 2), fib(n + 1) + fib(n), "F at {n}");
            assert_eq!(lucas(n + 2), lucas(n + 1) + lucas(n), "L at {n}");
        }
    }

    #[test]
    fn lucas_fibonacci_bridges() {
        for n in -60i64..=60 {
            assert_eq!(lucas(n), fib(n - 1) + fib(n + 1), "L_n = F_(n-1)+F_(n+1) at {n}");
            assert_eq!(b(5) * fib(n), lucas(n - 1) + lucas(n + 1), "5F_n at {n}");
            assert_eq!(lucas(n), fib(n + 2) - fib(n - 2), "L_n as F-difference at {n}");
            assert_eq!(b(2) * lucas(n), fib(n + 3) + fib(n - 3), "2L_n at {n}");
        }
    }

    #[test]
    fn doubling_identities() {
        for n in -60i64..=60 {
            assert_eq!(fib(2 * n + 1), &fib(n) * &fib(n) + &fib(n + 1) * &fib(n + 1));
            assert_eq!(fib(2 * n), &fib(n + 1) * &fib(n + 1) - &fib(n - 1) * &fib(n - 1));
        }
    }

    #[test]
    fn index_addition() {
        for n in (-30i64..=30).step_by(3) {
            for m in -30i64..=30 {
                assert_eq!(
                    fib(n + m + 1),
                    &fib(n) * &fib(m) + &fib(n + 1) * &fib(m + 1),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn docagne_identity() {
        for n in (-30i64..=30).step_by(3) {
            for m in -30i64..=30 {
                assert_eq!(
                    &fib(m) * &fib(n + 1) - &fib(m + 1) * &fib(n),
                    neg_one_pow(n) * fib(m - n),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn catalan_identity() {
        for n in -30i64..=30 {
            for r in 1i64..=12 {
                assert_eq!(
                    &fib(n) * &fib(n) - &fib(n - r) * &fib(n + r),
                    neg_one_pow(n - r) * &fib(r) * &fib(r),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn cassini_for_lucas() {
        for n in -60i64..=60 {
            assert_eq!(
                &lucas(n - 1) * &lucas(n + 1) - &lucas(n) * &lucas(n),
                b(5) * neg_one_pow(n - 1),
                "n={n}"
            );
        }
    }

    #[test]
    fn lucas_index_folding() {
        for n in (-30i64..=30).step_by(3) {
            for m in -30i64..=30 {
                let sum = lucas(m + n) + lucas(m - n);
                if n % 2 == 0 {
                    assert_eq!(sum, &lucas(m) * &lucas(n), "even n={n} m={m}");
                } else {
                    assert_eq!(sum, b(5) * &fib(m) * &fib(n), "odd n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn large_index_sanity() {
        // F_(10^5) ends in a digit consistent with the Pisano period of 10
        // (period 60): 10^5 mod 60 = 40, F_40 = 102334155, last digit 5.
        let f = fib(100_000);
        let s = f.to_string();
        assert_eq!(s.len(), 20899);
        assert!(s.ends_with('5'));
    }
}
