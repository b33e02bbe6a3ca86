//! The built-in claim catalog.
//!
//! Each claim pairs an exact left-hand evaluator with the stated right-hand
//! closed form, transcribed as stated. Several stated forms are wrong by a
//! constant or an index shift; the catalog encodes them verbatim so the
//! engine can report the exact residual instead of silently correcting them.
//!
//! Default grids keep every sequence index within |i| <= 80 so a full run
//! stays fast; bounds are clipped per parameter, and joint constraints
//! (`m >= n + 1`, `n >= r`) filter grid points during the walk.

use super::{Bindings, ClaimSpec, Domain, Param, ParamGrid, RhsForm};
use crate::bicomplex::{Axis, Bicomplex};
use crate::bifib::{bf, bf_conj, bf_real_radicand, bl, integer_components, BinetConstants};
use crate::sequences::{fib, lucas, neg_one_pow};
use num_bigint::BigInt;
use num_traits::Zero;
use std::sync::LazyLock;

type Bi = Bicomplex<BigInt>;

static CATALOG: LazyLock<Vec<ClaimSpec>> = LazyLock::new(build);
static BINET: LazyLock<BinetConstants> = LazyLock::new(BinetConstants::new);

/// All claims, sorted by id.
pub fn catalog() -> &'static [ClaimSpec] {
    &CATALOG
}

pub fn find_claim(id: &str) -> Option<&'static ClaimSpec> {
    CATALOG.iter().find(|c| c.id == id)
}

fn z() -> BigInt {
    BigInt::zero()
}

fn bi(w: BigInt, x: BigInt, y: BigInt, zz: BigInt) -> Bi {
    Bicomplex::new(w, x, y, zz)
}

fn sc(v: BigInt) -> Bi {
    Bicomplex::from_scalar(v)
}

/// `s * (i + j + 2k)`, the unit vector of both negative-index reflections.
fn spread_ijkk(s: BigInt) -> Bi {
    bi(z(), s.clone(), s.clone(), s * 2)
}

/// `s * (2j + k)`, the unit vector of both Cassini defects.
fn spread_2jk(s: BigInt) -> Bi {
    bi(z(), z(), s.clone() * 2, s)
}

fn grid_n(from: i64, to: i64) -> ParamGrid {
    ParamGrid::new().with_range("n", from, to)
}

fn grid_nm(n: (i64, i64), m: (i64, i64)) -> ParamGrid {
    ParamGrid::new().with_range("n", n.0, n.1).with_range("m", m.0, m.1)
}

fn param(name: &'static str, min: i64) -> Param {
    Param { name, min }
}

fn single(eval: super::EvalFn) -> Vec<RhsForm> {
    vec![RhsForm { name: "rhs", eval }]
}

// Conjugate self-products of BF_n against the stated quadratic forms.

fn d2_lhs_i(b: &Bindings) -> Bi {
    let n = b["n"];
    &bf(n) * &bf_conj(Axis::I, n)
}

fn d2_lhs_j(b: &Bindings) -> Bi {
    let n = b["n"];
    &bf(n) * &bf_conj(Axis::J, n)
}

fn d2_lhs_k(b: &Bindings) -> Bi {
    let n = b["n"];
    &bf(n) * &bf_conj(Axis::K, n)
}

fn d2i_rhs(b: &Bindings) -> Bi {
    let n = b["n"];
    bi(fib(2 * n + 1) - fib(2 * n + 7), z(), fib(2 * n + 3) * 2, z())
}

fn d2j_rhs(b: &Bindings) -> Bi {
    let n = b["n"];
    let f = |t: i64| fib(n + t);
    let re = &f(0) * &f(0) - &f(1) * &f(1) + &f(3) * &f(3) - &f(4) * &f(4);
    let im = (&f(0) * &f(1) + &f(2) * &f(3)) * 2;
    bi(re, im, z(), z())
}

fn d2k_rhs(b: &Bindings) -> Bi {
    let n = b["n"];
    bi(fib(2 * n + 1) + fib(2 * n + 7), z(), z(), neg_one_pow(n + 1) * 2)
}

// Product expansion BF_n * BL_m, componentwise as stated.

fn e12_lhs(b: &Bindings) -> Bi {
    &bf(b["n"]) * &bl(b["m"])
}

fn e12_rhs(b: &Bindings) -> Bi {
    let (n, m) = (b["n"], b["m"]);
    let f = |t: i64| fib(n + t);
    let l = |t: i64| lucas(m + t);
    bi(
        &f(0) * &l(0) - &f(1) * &l(1) - &f(2) * &l(2) - &f(3) * &l(3),
        &f(0) * &l(1) + &f(1) * &l(0) - &f(2) * &l(3) - &f(3) * &l(2),
        &f(0) * &l(2) + &f(2) * &l(0) - &f(1) * &l(3) - &f(3) * &l(1),
        &f(0) * &l(3) + &f(3) * &l(0) + &f(1) * &l(2) + &f(2) * &l(1),
    )
}

// Conjugate self-products of the mixed element BF_n + BL_m.

fn mixed(b: &Bindings) -> Bi {
    bf(b["n"]) + bl(b["m"])
}

fn e14i_lhs(b: &Bindings) -> Bi {
    let v = mixed(b);
    &v * &v.conj(Axis::I)
}

fn e14j_lhs(b: &Bindings) -> Bi {
    let v = mixed(b);
    &v * &v.conj(Axis::J)
}

fn e14k_lhs(b: &Bindings) -> Bi {
    let v = mixed(b);
    &v * &v.conj(Axis::K)
}

fn e14i_rhs(b: &Bindings) -> Bi {
    let v = mixed(b);
    let (a, bb, c, d) = (v.w, v.x, v.y, v.z);
    let re = &a * &a + &bb * &bb - &c * &c - &d * &d;
    let jj = (&a * &c + &bb * &d) * 2;
    bi(re, z(), jj, z())
}

fn e14j_rhs(b: &Bindings) -> Bi {
    let v = mixed(b);
    let (a, bb, c, d) = (v.w, v.x, v.y, v.z);
    let re = &a * &a - &bb * &bb + &c * &c - &d * &d;
    let ii = (&a * &bb + &c * &d) * 2;
    bi(re, ii, z(), z())
}

fn e14k_rhs(b: &Bindings) -> Bi {
    let v = mixed(b);
    let (a, bb, c, d) = (v.w, v.x, v.y, v.z);
    let re = &a * &a + &bb * &bb + &c * &c + &d * &d;
    let kk = (&a * &d - &bb * &c) * 2;
    bi(re, z(), z(), kk)
}

// Radicand of the real modulus against the stated Fibonacci pair.

fn modr_lhs(b: &Bindings) -> Bi {
    sc(bf_real_radicand(b["n"]))
}

fn modr_rhs(b: &Bindings) -> Bi {
    let n = b["n"];
    sc(fib(2 * n + 1) + fib(2 * n + 7))
}

// Linear and quadratic identities in BF and BL.

fn t1_1_lhs(b: &Bindings) -> Bi {
    bf(b["n"]) + bf(b["n"] + 1)
}

fn t1_1_rhs(b: &Bindings) -> Bi {
    bf(b["n"] + 2)
}

fn t1_2_lhs(b: &Bindings) -> Bi {
    bl(b["n"]) + bl(b["n"] + 1)
}

fn t1_2_rhs(b: &Bindings) -> Bi {
    bl(b["n"] + 2)
}

fn t1_3_lhs(b: &Bindings) -> Bi {
    bl(b["n"])
}

fn t1_3_rhs(b: &Bindings) -> Bi {
    bf(b["n"] - 1) + bf(b["n"] + 1)
}

fn t1_4_lhs(b: &Bindings) -> Bi {
    bl(b["n"])
}

fn t1_4_rhs(b: &Bindings) -> Bi {
    bf(b["n"] + 2) - bf(b["n"] - 2)
}

fn t1_5_lhs(b: &Bindings) -> Bi {
    let n = b["n"];
    bf(n).pow(2) + bf(n + 1).pow(2)
}

fn t1_5_rhs(b: &Bindings) -> Bi {
    let n = b["n"];
    let f = |t: i64| fib(2 * n + t);
    bf(2 * n + 1) + bi(f(2) + f(5), -(f(5) * 3i64), -f(6), f(4) * 3i64)
}

fn t1_6_lhs(b: &Bindings) -> Bi {
    let n = b["n"];
    bf(n + 1).pow(2) - bf(n - 1).pow(2)
}

fn t1_6_rhs(b: &Bindings) -> Bi {
    let n = b["n"];
    let f = |t: i64| fib(2 * n + t);
    bf(2 * n).scale(&BigInt::from(2)) + bi(f(4) + f(-1), -(f(5) * 2i64), -(f(4) * 2i64), f(3) * 2i64)
}

fn t1_7_lhs(b: &Bindings) -> Bi {
    let (n, m) = (b["n"], b["m"]);
    &bf(n) * &bf(m) + &bf(n + 1) * &bf(m + 1)
}

fn t1_7_rhs(b: &Bindings) -> Bi {
    let s = b["n"] + b["m"];
    let f = |t: i64| fib(s + t);
    bf(s + 1).scale(&BigInt::from(2))
        + bi(f(4) * 2i64 - f(1), -(f(6) * 2i64), -(f(5) * 2i64), f(4) * 2i64)
}

fn t1_8_lhs(b: &Bindings) -> Bi {
    let n = b["n"];
    bf(n) - bf(n + 1) * Bi::unit_i() + bf(n + 2) * Bi::unit_j() - bf(n + 3) * Bi::unit_k()
}

fn t1_8_rhs(b: &Bindings) -> Bi {
    sc(-(fib(b["n"] + 3) * 5i64))
}

fn t2_lhs(b: &Bindings) -> Bi {
    let (m, n) = (b["m"], b["n"]);
    &bf(m) * &bf(n + 1) - &bf(m + 1) * &bf(n)
}

fn t2_rhs(b: &Bindings) -> Bi {
    let (m, n) = (b["m"], b["n"]);
    let d = m - n;
    let vector = bi(
        fib(d),
        fib(d + 1),
        -(fib(d - 2) + fib(d + 2) * 2i64),
        fib(d - 1) * 2,
    );
    bf(d).scale(&neg_one_pow(n)) + vector.scale(&neg_one_pow(n + 1))
}

fn t2_domain(b: &Bindings) -> bool {
    b["m"] >= b["n"] + 1
}

fn t3f_lhs(b: &Bindings) -> Bi {
    bf(-b["n"])
}

fn t3f_rhs(b: &Bindings) -> Bi {
    let n = b["n"];
    bf(n).scale(&neg_one_pow(n + 1)) + spread_ijkk(neg_one_pow(n) * lucas(n))
}

fn t3l_lhs(b: &Bindings) -> Bi {
    bl(-b["n"])
}

fn t3l_rhs(b: &Bindings) -> Bi {
    let n = b["n"];
    bl(n).scale(&neg_one_pow(n)) + spread_ijkk(neg_one_pow(n + 1) * fib(n) * 5)
}

fn t4f_lhs(b: &Bindings) -> Bi {
    bf(b["n"])
}

fn t4f_rhs(b: &Bindings) -> Bi {
    integer_components(&BINET.bf(b["n"])).expect("Binet value has integer components")
}

fn t4l_lhs(b: &Bindings) -> Bi {
    bl(b["n"])
}

fn t4l_rhs(b: &Bindings) -> Bi {
    integer_components(&BINET.bl(b["n"])).expect("Binet value has integer components")
}

fn t5f_lhs(b: &Bindings) -> Bi {
    let n = b["n"];
    &bf(n + 1) * &bf(n - 1) - bf(n).pow(2)
}

fn t5f_rhs(b: &Bindings) -> Bi {
    spread_2jk(neg_one_pow(b["n"]) * 3)
}

fn t5l_lhs(b: &Bindings) -> Bi {
    let n = b["n"];
    &bl(n + 1) * &bl(n - 1) - bl(n).pow(2)
}

fn t5l_rhs(b: &Bindings) -> Bi {
    spread_2jk(neg_one_pow(b["n"] - 1) * 5)
}

fn t6_lhs(b: &Bindings) -> Bi {
    let (n, r) = (b["n"], b["r"]);
    bf(n).pow(2) - &bf(n + r) * &bf(n - r)
}

fn t6_statement(b: &Bindings) -> Bi {
    let (n, r) = (b["n"], b["r"]);
    let f = |t: i64| fib(r + t);
    let jj = (&f(-2) * &f(-2) + &f(0) * &f(0)) * 2;
    let kk = &f(1) * &f(1) + &f(-2) * &f(-2) - &f(0) * &f(0) - &f(-3) * &f(-3);
    bi(z(), z(), jj, kk).scale(&neg_one_pow(n - r))
}

fn t6_proof_expansion(b: &Bindings) -> Bi {
    let (n, r) = (b["n"], b["r"]);
    let f = |t: i64| fib(r + t);
    let f2r3 = fib(2 * r + 3);
    let jj = (&f(2) * &f(-1) + fib(2 * r + 1)) * 2;
    let kk = (&f(0) * &f(3)) * 2i64 + (&f(1) * &f(2)) * 2i64 + &f(0) * &f(0) + &f(-3) * &f(-3)
        - &f(1) * &f(1)
        - &f(-2) * &f(-2);
    let core = bf(r).pow(2) + bi(-f2r3.clone(), f2r3 * 2, jj, -kk);
    core.scale(&neg_one_pow(n - r))
}

fn t6_domain(b: &Bindings) -> bool {
    b["n"] >= b["r"]
}

/// `"(F[n+t] + L[m+t])"`, the mixed-element component in the expression
/// language.
fn mixed_dsl(t: i64) -> String {
    let f = if t == 0 { "F[n]".to_string() } else { format!("F[n+{t}]") };
    let l = if t == 0 { "L[m]".to_string() } else { format!("L[m+{t}]") };
    format!("({f} + {l})")
}

fn e14_dsl(axis: Axis) -> String {
    let a = mixed_dsl(0);
    let b = mixed_dsl(1);
    let c = mixed_dsl(2);
    let d = mixed_dsl(3);
    let (conj, rhs) = match axis {
        Axis::I => (
            format!("({a} - {b}*i + {c}*j - {d}*k)"),
            format!("{a}^2 + {b}^2 - {c}^2 - {d}^2 + 2*({a}*{c} + {b}*{d})*j"),
        ),
        Axis::J => (
            format!("({a} + {b}*i - {c}*j - {d}*k)"),
            format!("{a}^2 - {b}^2 + {c}^2 - {d}^2 + 2*({a}*{b} + {c}*{d})*i"),
        ),
        Axis::K => (
            format!("({a} - {b}*i - {c}*j + {d}*k)"),
            format!("{a}^2 + {b}^2 + {c}^2 + {d}^2 + 2*({a}*{d} - {b}*{c})*k"),
        ),
    };
    format!("({a} + {b}*i + {c}*j + {d}*k)*{conj} == {rhs}")
}

fn build() -> Vec<ClaimSpec> {
    vec![
        ClaimSpec {
            id: "C-D2I",
            citation: "quadratic form for BF_n times its i-conjugate",
            params: vec![param("n", 0)],
            domain: None,
            lhs: d2_lhs_i,
            rhs_forms: single(d2i_rhs),
            default_grid: grid_n(0, 36),
            dsl: Some(
                "BF[n]*(F[n] - F[n+1]*i + F[n+2]*j - F[n+3]*k) \
                 == F[2*n+1] - F[2*n+7] + 2*F[2*n+3]*j"
                    .into(),
            ),
        },
        ClaimSpec {
            id: "C-D2J",
            citation: "quadratic form for BF_n times its j-conjugate",
            params: vec![param("n", 0)],
            domain: None,
            lhs: d2_lhs_j,
            rhs_forms: single(d2j_rhs),
            default_grid: grid_n(0, 60),
            dsl: Some(
                "BF[n]*(F[n] + F[n+1]*i - F[n+2]*j - F[n+3]*k) \
                 == F[n]^2 - F[n+1]^2 + F[n+3]^2 - F[n+4]^2 \
                 + 2*(F[n]*F[n+1] + F[n+2]*F[n+3])*i"
                    .into(),
            ),
        },
        ClaimSpec {
            id: "C-D2K",
            citation: "quadratic form for BF_n times its k-conjugate",
            params: vec![param("n", 0)],
            domain: None,
            lhs: d2_lhs_k,
            rhs_forms: single(d2k_rhs),
            default_grid: grid_n(0, 36),
            dsl: Some(
                "BF[n]*(F[n] - F[n+1]*i - F[n+2]*j + F[n+3]*k) \
                 == F[2*n+1] + F[2*n+7] + 2*(-1)^(n+1)*k"
                    .into(),
            ),
        },
        ClaimSpec {
            id: "C-E12",
            citation: "componentwise expansion of the product BF_n BL_m",
            params: vec![param("m", 0), param("n", 0)],
            domain: None,
            lhs: e12_lhs,
            rhs_forms: single(e12_rhs),
            default_grid: grid_nm((0, 60), (0, 60)),
            dsl: Some(
                "BF[n]*BL[m] == F[n]*L[m] - F[n+1]*L[m+1] - F[n+2]*L[m+2] - F[n+3]*L[m+3] \
                 + (F[n]*L[m+1] + F[n+1]*L[m] - F[n+2]*L[m+3] - F[n+3]*L[m+2])*i \
                 + (F[n]*L[m+2] + F[n+2]*L[m] - F[n+1]*L[m+3] - F[n+3]*L[m+1])*j \
                 + (F[n]*L[m+3] + F[n+3]*L[m] + F[n+1]*L[m+2] + F[n+2]*L[m+1])*k"
                    .into(),
            ),
        },
        ClaimSpec {
            id: "C-E14I",
            citation: "i-conjugate self-product of BF_n + BL_m",
            params: vec![param("m", 0), param("n", 0)],
            domain: None,
            lhs: e14i_lhs,
            rhs_forms: single(e14i_rhs),
            default_grid: grid_nm((0, 60), (0, 60)),
            dsl: Some(e14_dsl(Axis::I)),
        },
        ClaimSpec {
            id: "C-E14J",
            citation: "j-conjugate self-product of BF_n + BL_m",
            params: vec![param("m", 0), param("n", 0)],
            domain: None,
            lhs: e14j_lhs,
            rhs_forms: single(e14j_rhs),
            default_grid: grid_nm((0, 60), (0, 60)),
            dsl: Some(e14_dsl(Axis::J)),
        },
        ClaimSpec {
            id: "C-E14K",
            citation: "k-conjugate self-product of BF_n + BL_m",
            params: vec![param("m", 0), param("n", 0)],
            domain: None,
            lhs: e14k_lhs,
            rhs_forms: single(e14k_rhs),
            default_grid: grid_nm((0, 60), (0, 60)),
            dsl: Some(e14_dsl(Axis::K)),
        },
        ClaimSpec {
            id: "C-MODR",
            citation: "radicand of the real modulus of BF_n",
            params: vec![param("n", 0)],
            domain: None,
            lhs: modr_lhs,
            rhs_forms: single(modr_rhs),
            default_grid: grid_n(0, 36),
            dsl: Some(
                "F[n]^2 + F[n+1]^2 + F[n+2]^2 + F[n+3]^2 == F[2*n+1] + F[2*n+7]".into(),
            ),
        },
        ClaimSpec {
            id: "C-T1-1",
            citation: "recurrence BF_n + BF_{n+1} = BF_{n+2}",
            params: vec![param("n", 0)],
            domain: None,
            lhs: t1_1_lhs,
            rhs_forms: single(t1_1_rhs),
            default_grid: grid_n(0, 60),
            dsl: Some("BF[n] + BF[n+1] == BF[n+2]".into()),
        },
        ClaimSpec {
            id: "C-T1-2",
            citation: "recurrence BL_n + BL_{n+1} = BL_{n+2}",
            params: vec![param("n", 0)],
            domain: None,
            lhs: t1_2_lhs,
            rhs_forms: single(t1_2_rhs),
            default_grid: grid_n(0, 60),
            dsl: Some("BL[n] + BL[n+1] == BL[n+2]".into()),
        },
        ClaimSpec {
            id: "C-T1-3",
            citation: "bridge BL_n = BF_{n-1} + BF_{n+1}",
            params: vec![param("n", 0)],
            domain: None,
            lhs: t1_3_lhs,
            rhs_forms: single(t1_3_rhs),
            default_grid: grid_n(0, 60),
            dsl: Some("BL[n] == BF[n-1] + BF[n+1]".into()),
        },
        ClaimSpec {
            id: "C-T1-4",
            citation: "bridge BL_n = BF_{n+2} - BF_{n-2}",
            params: vec![param("n", 0)],
            domain: None,
            lhs: t1_4_lhs,
            rhs_forms: single(t1_4_rhs),
            default_grid: grid_n(0, 60),
            dsl: Some("BL[n] == BF[n+2] - BF[n-2]".into()),
        },
        ClaimSpec {
            id: "C-T1-5",
            citation: "sum of squares of consecutive BF",
            params: vec![param("n", 0)],
            domain: None,
            lhs: t1_5_lhs,
            rhs_forms: single(t1_5_rhs),
            default_grid: grid_n(0, 37),
            dsl: Some(
                "BF[n]^2 + BF[n+1]^2 == BF[2*n+1] + F[2*n+2] + F[2*n+5] \
                 - 3*F[2*n+5]*i - F[2*n+6]*j + 3*F[2*n+4]*k"
                    .into(),
            ),
        },
        ClaimSpec {
            id: "C-T1-6",
            citation: "difference of squares of BF two apart",
            params: vec![param("n", 0)],
            domain: None,
            lhs: t1_6_lhs,
            rhs_forms: single(t1_6_rhs),
            default_grid: grid_n(0, 37),
            dsl: Some(
                "BF[n+1]^2 - BF[n-1]^2 == 2*BF[2*n] + F[2*n+4] + F[2*n-1] \
                 + 2*(-F[2*n+5]*i - F[2*n+4]*j + F[2*n+3]*k)"
                    .into(),
            ),
        },
        ClaimSpec {
            id: "C-T1-7",
            citation: "cross products BF_n BF_m + BF_{n+1} BF_{m+1}",
            params: vec![param("m", 0), param("n", 0)],
            domain: None,
            lhs: t1_7_lhs,
            rhs_forms: single(t1_7_rhs),
            default_grid: grid_nm((0, 37), (0, 37)),
            dsl: Some(
                "BF[n]*BF[m] + BF[n+1]*BF[m+1] == 2*BF[n+m+1] + 2*F[n+m+4] - F[n+m+1] \
                 - 2*F[n+m+6]*i - 2*F[n+m+5]*j + 2*F[n+m+4]*k"
                    .into(),
            ),
        },
        ClaimSpec {
            id: "C-T1-8",
            citation: "alternating unit-weighted sum of four consecutive BF",
            params: vec![param("n", 0)],
            domain: None,
            lhs: t1_8_lhs,
            rhs_forms: single(t1_8_rhs),
            default_grid: grid_n(0, 60),
            dsl: Some("BF[n] - BF[n+1]*i + BF[n+2]*j - BF[n+3]*k == -5*F[n+3]".into()),
        },
        ClaimSpec {
            id: "C-T2",
            citation: "d'Ocagne-style product difference for BF",
            params: vec![param("m", 1), param("n", 0)],
            domain: Some(Domain { check: t2_domain, describe: "m >= n + 1" }),
            lhs: t2_lhs,
            rhs_forms: single(t2_rhs),
            default_grid: grid_nm((0, 60), (0, 60)),
            dsl: Some(
                "BF[m]*BF[n+1] - BF[m+1]*BF[n] == (-1)^n*BF[m-n] \
                 + (-1)^(n+1)*(F[m-n] + F[m-n+1]*i - (F[m-n-2] + 2*F[m-n+2])*j \
                 + 2*F[m-n-1]*k)"
                    .into(),
            ),
        },
        ClaimSpec {
            id: "C-T3F",
            citation: "negative-index reflection for BF",
            params: vec![param("n", 0)],
            domain: None,
            lhs: t3f_lhs,
            rhs_forms: single(t3f_rhs),
            default_grid: grid_n(0, 60),
            dsl: Some("BF[-n] == (-1)^(n+1)*BF[n] + (-1)^n*L[n]*(i + j + 2*k)".into()),
        },
        ClaimSpec {
            id: "C-T3L",
            citation: "negative-index reflection for BL",
            params: vec![param("n", 0)],
            domain: None,
            lhs: t3l_lhs,
            rhs_forms: single(t3l_rhs),
            default_grid: grid_n(0, 60),
            dsl: Some("BL[-n] == (-1)^n*BL[n] + (-1)^(n+1)*5*F[n]*(i + j + 2*k)".into()),
        },
        ClaimSpec {
            id: "C-T4F",
            citation: "Binet form reproduces BF",
            params: vec![param("n", 0)],
            domain: None,
            lhs: t4f_lhs,
            rhs_forms: single(t4f_rhs),
            default_grid: grid_n(0, 60),
            dsl: None,
        },
        ClaimSpec {
            id: "C-T4L",
            citation: "Binet form reproduces BL",
            params: vec![param("n", 0)],
            domain: None,
            lhs: t4l_lhs,
            rhs_forms: single(t4l_rhs),
            default_grid: grid_n(0, 60),
            dsl: None,
        },
        ClaimSpec {
            id: "C-T5F",
            citation: "Cassini identity for BF",
            params: vec![param("n", 1)],
            domain: None,
            lhs: t5f_lhs,
            rhs_forms: single(t5f_rhs),
            default_grid: grid_n(1, 60),
            dsl: Some("BF[n+1]*BF[n-1] - BF[n]^2 == 3*(-1)^n*(2*j + k)".into()),
        },
        ClaimSpec {
            id: "C-T5L",
            citation: "Cassini identity for BL",
            params: vec![param("n", 1)],
            domain: None,
            lhs: t5l_lhs,
            rhs_forms: single(t5l_rhs),
            default_grid: grid_n(1, 60),
            dsl: Some("BL[n+1]*BL[n-1] - BL[n]^2 == 5*(-1)^(n-1)*(2*j + k)".into()),
        },
        ClaimSpec {
            id: "C-T6",
            citation: "Catalan identity for BF",
            params: vec![param("n", 1), param("r", 1)],
            domain: Some(Domain { check: t6_domain, describe: "n >= r" }),
            lhs: t6_lhs,
            rhs_forms: vec![
                RhsForm { name: "statement", eval: t6_statement },
                RhsForm { name: "proof_expansion", eval: t6_proof_expansion },
            ],
            default_grid: ParamGrid::new().with_range("n", 1, 60).with_range("r", 1, 12),
            dsl: Some(
                "BF[n]^2 - BF[n+r]*BF[n-r] == (-1)^(n-r)*(2*(F[r-2]^2 + F[r]^2)*j \
                 + (F[r+1]^2 + F[r-2]^2 - F[r]^2 - F[r-3]^2)*k)"
                    .into(),
            ),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{run_all, verify_claim, Verdict};

    fn as_i64(v: &Bi) -> (i64, i64, i64, i64) {
        let c = |x: &BigInt| i64::try_from(x).expect("fits in i64");
        (c(&v.w), c(&v.x), c(&v.y), c(&v.z))
    }

    #[test]
    fn default_grid_verdicts_match_the_frozen_table() {
        let expected = [
            ("C-D2I", Verdict::Fail, 37),
            ("C-D2J", Verdict::Fail, 61),
            ("C-D2K", Verdict::Fail, 37),
            ("C-E12", Verdict::Fail, 3721),
            ("C-E14I", Verdict::Pass, 3721),
            ("C-E14J", Verdict::Pass, 3721),
            ("C-E14K", Verdict::Pass, 3721),
            ("C-MODR", Verdict::Fail, 37),
            ("C-T1-1", Verdict::Pass, 61),
            ("C-T1-2", Verdict::Pass, 61),
            ("C-T1-3", Verdict::Pass, 61),
            ("C-T1-4", Verdict::Pass, 61),
            ("C-T1-5", Verdict::Pass, 38),
            ("C-T1-6", Verdict::Pass, 38),
            ("C-T1-7", Verdict::Pass, 1444),
            ("C-T1-8", Verdict::Fail, 61),
            ("C-T2", Verdict::Fail, 1830),
            ("C-T3F", Verdict::Pass, 61),
            ("C-T3L", Verdict::Pass, 61),
            ("C-T4F", Verdict::Pass, 61),
            ("C-T4L", Verdict::Pass, 61),
            ("C-T5F", Verdict::Pass, 60),
            ("C-T5L", Verdict::Fail, 60),
            ("C-T6", Verdict::Fail, 654),
        ];
        let report = run_all();
        assert_eq!(report.claims.len(), expected.len());
        for (claim, (id, verdict, points)) in report.claims.iter().zip(expected) {
            assert_eq!(claim.claim_id, id);
            assert_eq!(claim.verdict, verdict, "{id}");
            assert_eq!(claim.points_checked, points, "{id}");
        }
    }

    #[test]
    fn failing_claims_report_the_frozen_counterexamples() {
        // (id, bindings, lhs, rhs, residual)
        let expected: &[(&str, &[(&str, i64)], [i64; 4], [i64; 4], [i64; 4])] = &[
            ("C-D2I", &[("n", 0)], [-4, 0, 4, 0], [-12, 0, 4, 0], [8, 0, 0, 0]),
            ("C-D2J", &[("n", 0)], [-4, 4, 0, 0], [-6, 4, 0, 0], [2, 0, 0, 0]),
            ("C-D2K", &[("n", 0)], [6, 0, 0, -2], [14, 0, 0, -2], [-8, 0, 0, 0]),
            ("C-E12", &[("m", 0), ("n", 0)], [4, -8, -4, 8], [-12, -8, -4, 8], [16, 0, 0, 0]),
            ("C-MODR", &[("n", 0)], [6, 0, 0, 0], [14, 0, 0, 0], [-8, 0, 0, 0]),
            ("C-T1-8", &[("n", 0)], [-10, 0, 8, 0], [-10, 0, 0, 0], [0, 0, 8, 0]),
            ("C-T2", &[("m", 1), ("n", 0)], [0, 0, 6, 3], [0, 0, 7, 3], [0, 0, -1, 0]),
            ("C-T5L", &[("n", 1)], [0, 0, 30, 15], [0, 0, 10, 5], [0, 0, 20, 10]),
            ("C-T6", &[("n", 1), ("r", 1)], [0, 0, 6, 3], [0, 0, 4, 0], [0, 0, 2, 3]),
        ];
        for (id, bindings, lhs, rhs, residual) in expected {
            let claim = find_claim(id).unwrap();
            let report = verify_claim(id, &claim.default_grid).unwrap();
            assert_eq!(report.verdict, Verdict::Fail, "{id}");
            let cx = report.first_counterexample.as_ref().unwrap();
            let got: Vec<(&str, i64)> = cx.bindings.iter().collect();
            assert_eq!(got, *bindings, "{id} bindings");
            let unpack = |v: [i64; 4]| (v[0], v[1], v[2], v[3]);
            assert_eq!(as_i64(&cx.lhs), unpack(*lhs), "{id} lhs");
            assert_eq!(as_i64(&cx.rhs), unpack(*rhs), "{id} rhs");
            assert_eq!(as_i64(&cx.residual), unpack(*residual), "{id} residual");
        }
    }

    #[test]
    fn e12_defect_is_twice_the_product_of_trailing_components() {
        // The stated real part flips the sign of the d1*d2 term, so the
        // residual is exactly 2*F_{n+3}*L_{m+3} everywhere.
        for n in 0..10 {
            for m in 0..10 {
                let b = Bindings::from([("m", m), ("n", n)]);
                let residual = e12_lhs(&b) - e12_rhs(&b);
                let expected = fib(n + 3) * lucas(m + 3) * 2;
                assert_eq!(residual, sc(expected));
            }
        }
    }

    #[test]
    fn docagne_defect_is_a_lucas_number_in_the_j_slot() {
        // The stated j-coefficient is F_{m-n-2} + 2 F_{m-n+2}; the product
        // expands to F_{m-n-2} + 2 F_{m-n+2} - L_{m-n}, so the residual is
        // (-1)^(n+1) L_{m-n} j at every point.
        for m in 1..12 {
            for n in 0..m {
                let b = Bindings::from([("m", m), ("n", n)]);
                let residual = t2_lhs(&b) - t2_rhs(&b);
                let expected = bi(z(), z(), neg_one_pow(n + 1) * lucas(m - n), z());
                assert_eq!(residual, expected, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn cassini_bl_defect_is_a_constant_factor() {
        // The true defect is 15*(-1)^(n-1)*(2j + k); the stated rhs has 5.
        for n in 1..20 {
            let b = Bindings::from([("n", n)]);
            assert_eq!(t5l_lhs(&b), spread_2jk(neg_one_pow(n - 1) * 15));
        }
    }

    #[test]
    fn radicand_defect_is_an_index_shift() {
        // True: F_{2n+1} + F_{2n+5}. Stated: F_{2n+1} + F_{2n+7}.
        for n in 0..20 {
            let b = Bindings::from([("n", n)]);
            assert_eq!(modr_lhs(&b), sc(fib(2 * n + 1) + fib(2 * n + 5)));
            let residual = modr_lhs(&b) - modr_rhs(&b);
            assert_eq!(residual, sc(fib(2 * n + 5) - fib(2 * n + 7)));
        }
    }

    #[test]
    fn negative_index_reflections_hold_far_out() {
        for n in 0..200 {
            let b = Bindings::from([("n", n)]);
            assert_eq!(t3f_lhs(&b), t3f_rhs(&b));
            assert_eq!(t3l_lhs(&b), t3l_rhs(&b));
        }
    }

    #[test]
    fn dsl_strings_reference_only_declared_parameters() {
        for claim in catalog() {
            if let Some(dsl) = &claim.dsl {
                assert!(dsl.contains("=="), "{} dsl is an equation", claim.id);
                for var in ["n", "m", "r"] {
                    let used = dsl
                        .as_bytes()
                        .windows(var.len() + 2)
                        .any(|w| w[1..w.len() - 1] == *var.as_bytes()
                            && !w[0].is_ascii_alphanumeric()
                            && !w[w.len() - 1].is_ascii_alphanumeric());
                    let declared = claim.params.iter().any(|p| p.name == var);
                    if used {
                        assert!(declared, "{} dsl uses undeclared `{var}`", claim.id);
                    }
                }
            }
        }
    }
}
