//! Exact arithmetic for bicomplex Fibonacci and Lucas numbers.
//!
//! The crate is organized around one commutative ring and two integer
//! sequences embedded in it:
//!
//! * [`bicomplex`] implements the commutative four-dimensional ring with
//!   units `1, i, j, k` where `i^2 = j^2 = -1`, `k = ij`, and `k^2 = +1`,
//!   generically over any scalar ring.
//! * [`sequences`] computes Fibonacci and Lucas numbers at arbitrary signed
//!   indices via fast doubling.
//! * [`bifib`] packages four consecutive sequence values as a bicomplex
//!   number (`BF_n`, `BL_n`) and provides their closed Binet forms over the
//!   real quadratic field `Q(sqrt 5)` from [`exactnum`].
//! * [`engine`] verifies a fixed catalog of identities about those numbers
//!   on finite parameter grids, with exact residuals and deterministic
//!   reports.
//! * [`idlang`] parses and evaluates a small expression language for
//!   stating such identities at runtime.
//!
//! All arithmetic is exact: integers are arbitrary-precision and the Binet
//! forms are symbolic elements `p + q*sqrt(5)` with rational `p`, `q`.
//! Nothing here rounds.

pub mod bicomplex;
pub mod bifib;
pub mod engine;
pub mod exactnum;
pub mod idlang;
pub mod sequences;

pub use bicomplex::{Axis, Bicomplex, ComplexPair};
pub use exactnum::{QuadElem, Rational};
pub use sequences::SequenceIndex;
