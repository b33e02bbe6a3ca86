//! Acceptance gate: one test per release criterion. Sample sizes, grids,
//! time bounds, and expected values are pinned in code; a regression shows
//! up as a failing test here, not as a judgement call.

use std::time::{Duration, Instant};

use bifib_core::bicomplex::{Axis, Bicomplex};
use bifib_core::bifib::{bf, bf_binet, bl, bl_binet, integer_components, BinetConstants};
use bifib_core::engine::{self, Bindings, LinearCombination, PointOutcome, Verdict};
use bifib_core::idlang;
use bifib_core::sequences::{fib, fib_pair_oracle, lucas};
use num_bigint::{BigInt, Sign};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Bi = Bicomplex<BigInt>;

fn random_bigint(rng: &mut ChaCha8Rng, bytes: usize) -> BigInt {
    let mut buf = vec![0u8; bytes];
    rng.fill(&mut buf[..]);
    let sign = if rng.gen::<bool>() { Sign::Plus } else { Sign::Minus };
    BigInt::from_bytes_le(sign, &buf)
}

fn random_bicomplex(rng: &mut ChaCha8Rng, bytes: usize) -> Bi {
    Bicomplex::new(
        random_bigint(rng, bytes),
        random_bigint(rng, bytes),
        random_bigint(rng, bytes),
        random_bigint(rng, bytes),
    )
}

fn bi(c: [i64; 4]) -> Bi {
    Bicomplex::new(BigInt::from(c[0]), BigInt::from(c[1]), BigInt::from(c[2]), BigInt::from(c[3]))
}

#[test]
fn ring_axioms_hold_on_random_256_bit_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB1F1B_0001);
    let start = Instant::now();
    for _ in 0..500 {
        let x = random_bicomplex(&mut rng, 32);
        let y = random_bicomplex(&mut rng, 32);
        let z = random_bicomplex(&mut rng, 32);
        assert_eq!(&x * &y, &y * &x);
        assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "ring-axiom sweep took {elapsed:?}");
}

/// Product through the 16 scalar terms of the basis-unit table, written
/// out independently of the library's component formulas.
fn unit_table_product(x: &Bi, y: &Bi) -> Bi {
    // (sign, slot) of each basis product; slots 0..3 are 1, i, j, k.
    const TABLE: [[(i8, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (1, 3), (-1, 0), (-1, 1)],
        [(1, 3), (-1, 2), (-1, 1), (1, 0)],
    ];
    let xs = [&x.w, &x.x, &x.y, &x.z];
    let ys = [&y.w, &y.x, &y.y, &y.z];
    let mut out = [BigInt::from(0), BigInt::from(0), BigInt::from(0), BigInt::from(0)];
    for a in 0..4 {
        for b in 0..4 {
            let (sign, slot) = TABLE[a][b];
            let term = xs[a] * ys[b];
            if sign < 0 {
                out[slot] -= term;
            } else {
                out[slot] += term;
            }
        }
    }
    let [w, x, y, z] = out;
    Bicomplex::new(w, x, y, z)
}

#[test]
fn multiplication_matches_the_sixteen_term_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB1F1B_0002);
    for _ in 0..1000 {
        let x = random_bicomplex(&mut rng, 32);
        let y = random_bicomplex(&mut rng, 32);
        assert_eq!(&x * &y, unit_table_product(&x, &y));
    }
}

#[test]
fn conjugate_self_products_have_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB1F1B_0003);
    let two = BigInt::from(2);
    let zero = BigInt::from(0);
    for _ in 0..500 {
        let v = random_bicomplex(&mut rng, 32);
        let (a, b, c, d) = (&v.w, &v.x, &v.y, &v.z);
        let i_form = Bicomplex::new(
            a * a + b * b - c * c - d * d,
            zero.clone(),
            (a * c + b * d) * &two,
            zero.clone(),
        );
        assert_eq!(&v * &v.conj(Axis::I), i_form);
        let j_form = Bicomplex::new(
            a * a - b * b + c * c - d * d,
            (a * b + c * d) * &two,
            zero.clone(),
            zero.clone(),
        );
        assert_eq!(&v * &v.conj(Axis::J), j_form);
        let k_form = Bicomplex::new(
            a * a + b * b + c * c + d * d,
            zero.clone(),
            zero.clone(),
            (a * d - b * c) * &two,
        );
        assert_eq!(&v * &v.conj(Axis::K), k_form);
    }
    for id in ["C-E14I", "C-E14J", "C-E14K"] {
        let claim = engine::find_claim(id).expect("cataloged");
        let report = engine::verify_claim(id, &claim.default_grid).expect("grid valid");
        assert_eq!(report.verdict, Verdict::Pass, "{id}");
    }
}

#[test]
fn sequence_lemmas_hold_across_the_signed_grid() {
    let start = Instant::now();

    let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
    for n in 0..=2000i64 {
        assert_eq!(fib(n), a, "fib({n})");
        let next = &a + &b;
        a = b;
        b = next;
    }
    assert_eq!(fib_pair_oracle(2000).expect("nonnegative index").0, fib(2000));

    let off = 130i64;
    let fs: Vec<BigInt> = (-off..=off).map(fib).collect();
    let ls: Vec<BigInt> = (-off..=off).map(lucas).collect();
    let f = |n: i64| &fs[(n + off) as usize];
    let l = |n: i64| &ls[(n + off) as usize];
    let neg1 = |e: i64| BigInt::from(if e.rem_euclid(2) == 0 { 1 } else { -1 });
    let five = BigInt::from(5);

    for n in -60..=60i64 {
        assert_eq!(*f(n), f(n - 1) + f(n - 2));
        assert_eq!(*l(n), l(n - 1) + l(n - 2));
        assert_eq!(f(n) * f(n) + f(n + 1) * f(n + 1), *f(2 * n + 1));
        assert_eq!(f(n + 1) * f(n + 1) - f(n - 1) * f(n - 1), *f(2 * n));
        assert_eq!(f(n - 1) + f(n + 1), *l(n));
        assert_eq!(f(n + 2) - f(n - 2), *l(n));
        assert_eq!(f(n + 3) + f(n - 3), l(n) * 2i64);
        assert_eq!(l(n - 1) + l(n + 1), f(n) * 5i64);
        assert_eq!(l(n - 1) * l(n + 1) - l(n) * l(n), &five * neg1(n - 1));
        for m in -60..=60i64 {
            assert_eq!(f(n) * f(m) + f(n + 1) * f(m + 1), *f(n + m + 1));
            assert_eq!(f(m) * f(n + 1) - f(m + 1) * f(n), neg1(n) * f(m - n));
            assert_eq!(
                l(m + n) + l(m - n),
                if n.rem_euclid(2) == 1 { &five * (f(m) * f(n)) } else { l(m) * l(n) },
                "index fold at m = {m}, n = {n}"
            );
        }
        for r in -60..=60i64 {
            assert_eq!(f(n) * f(n) - f(n - r) * f(n + r), neg1(n - r) * (f(r) * f(r)));
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "sequence sweep took {elapsed:?}");
}

#[test]
fn binet_forms_reduce_to_the_integer_sequences() {
    let constants = BinetConstants::new();
    for n in -30..=120i64 {
        let from_binet = integer_components(&constants.bf(n)).expect("components are integers");
        assert_eq!(from_binet, bf(n), "BF({n})");
        let from_binet = integer_components(&constants.bl(n)).expect("components are integers");
        assert_eq!(from_binet, bl(n), "BL({n})");
    }
    assert_eq!(integer_components(&bf_binet(-30)), Some(bf(-30)));
    assert_eq!(integer_components(&bl_binet(117)), Some(bl(117)));
}

#[test]
fn default_catalog_run_reproduces_the_frozen_table() {
    let start = Instant::now();
    let report = engine::run_all();
    let json = report.to_json_string();

    let expected: [(&str, Verdict, u64); 24] = [
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
    assert_eq!(report.claims.len(), expected.len());
    assert_eq!(report.counts(), (15, 9));
    for (claim, (id, verdict, points)) in report.claims.iter().zip(expected) {
        assert_eq!(claim.claim_id, id);
        assert_eq!(claim.verdict, verdict, "{id}");
        assert_eq!(claim.points_checked, points, "{id}");
        assert_eq!(claim.verdict == Verdict::Pass, claim.first_counterexample.is_none(), "{id}");
    }

    #[allow(clippy::type_complexity)]
    let counterexamples: &[(&str, &[(&str, i64)], [i64; 4], [i64; 4], [i64; 4])] = &[
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
    for &(id, bindings, lhs, rhs, residual) in counterexamples {
        let claim = report.claims.iter().find(|c| c.claim_id == id).expect("claim present");
        let cx = claim.first_counterexample.as_ref().expect("failing claim has counterexample");
        let got: Vec<(&str, i64)> = cx.bindings.iter().collect();
        assert_eq!(got, bindings, "{id}");
        assert_eq!(cx.lhs, bi(lhs), "{id} lhs");
        assert_eq!(cx.rhs, bi(rhs), "{id} rhs");
        assert_eq!(cx.residual, bi(residual), "{id} residual");
    }

    // The conjugate-product defects sit entirely in the real slot: cross
    // components of those counterexample residuals vanish.
    for id in ["C-D2I", "C-D2J", "C-D2K"] {
        let claim = report.claims.iter().find(|c| c.claim_id == id).expect("claim present");
        let cx = claim.first_counterexample.as_ref().expect("counterexample");
        let zero = BigInt::from(0);
        assert_eq!((&cx.residual.x, &cx.residual.y, &cx.residual.z), (&zero, &zero, &zero), "{id}");
    }

    let second = engine::run_all();
    assert_eq!(second.to_json_string(), json, "rerun must be byte-identical");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "full run took {elapsed:?}");

    let run = |args: &[&str]| {
        std::process::Command::new(env!("CARGO_BIN_EXE_bifib"))
            .args(args)
            .output()
            .expect("binary spawns")
    };
    let first_cli = run(&["verify", "--all", "--format", "json"]);
    let second_cli = run(&["verify", "--all", "--format", "json"]);
    assert_eq!(first_cli.status.code(), Some(1), "a failing claim must set exit code 1");
    assert_eq!(first_cli.stdout, second_cli.stdout, "CLI reruns must be byte-identical");
    let cli_json = String::from_utf8(first_cli.stdout).expect("stdout is utf-8");
    assert_eq!(cli_json.trim_end(), json, "CLI must emit the library report verbatim");
}

#[test]
fn expression_language_agrees_with_builtin_evaluators() {
    let mut rendered = 0;
    let mut unrendered = Vec::new();
    for claim in engine::catalog() {
        let Some(dsl) = &claim.dsl else {
            unrendered.push(claim.id);
            continue;
        };
        rendered += 1;
        let (lhs, rhs) = idlang::parse_equation(dsl).expect("catalog equation parses");
        let grid = claim.clip_grid(&claim.default_grid).expect("default grid covers the claim");
        let domain_fn;
        let domain: Option<&dyn Fn(&Bindings) -> bool> = match &claim.domain {
            Some(d) => {
                domain_fn = d.check;
                Some(&domain_fn)
            }
            None => None,
        };
        let mut eval = |b: &Bindings| -> Result<PointOutcome, idlang::EvalError> {
            let l = idlang::eval_expr(&lhs, b)?;
            let r = idlang::eval_expr(&rhs, b)?;
            Ok(PointOutcome { matched_form: (l == r).then_some("rhs"), lhs: l, rhs: r })
        };
        let via_dsl =
            engine::verify_grid(claim.id, claim.citation, &grid, domain, &["rhs"], &mut eval)
                .expect("expression evaluation succeeds");
        let builtin = engine::verify_claim(claim.id, &claim.default_grid).expect("claim verifies");
        assert_eq!(via_dsl.verdict, builtin.verdict, "{}", claim.id);
        assert_eq!(via_dsl.points_checked, builtin.points_checked, "{}", claim.id);
        assert_eq!(via_dsl.first_counterexample, builtin.first_counterexample, "{}", claim.id);
        assert_eq!(via_dsl.grid, builtin.grid, "{}", claim.id);
    }
    assert_eq!(rendered, 22);
    assert_eq!(unrendered, ["C-T4F", "C-T4L"], "only the radical forms stay outside the language");
}

fn random_coeffs(rng: &mut ChaCha8Rng) -> Vec<i64> {
    let len = rng.gen_range(0..=6);
    (0..len).map(|_| rng.gen_range(-5..=5)).collect()
}

#[test]
fn linear_transfer_carries_scalar_relations_to_bicomplex_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB1F1B_0008);
    let mut premise_seen = 0;
    for _ in 0..200 {
        let combo = LinearCombination {
            alpha: random_coeffs(&mut rng),
            beta: random_coeffs(&mut rng),
        };
        let check = engine::linear_transfer_check(&combo);
        if check.premise_holds {
            premise_seen += 1;
            assert!(check.conclusion_holds, "{combo:?}");
        }
    }

    // Constructed premise-true combinations: Lucas terms rewritten through
    // L_m = 2 F_{m+1} - F_m, then a Fibonacci-recurrence reshuffle on top.
    for _ in 0..100 {
        let beta: Vec<i64> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(-5..=5)).collect();
        let mut alpha = vec![0i64; beta.len() + 1];
        for (m, bm) in beta.iter().enumerate() {
            alpha[m] += bm;
            alpha[m + 1] -= 2 * bm;
        }
        let t = rng.gen_range(0..=3usize);
        let c = rng.gen_range(-5..=5i64);
        while alpha.len() < t + 3 {
            alpha.push(0);
        }
        alpha[t] -= c;
        alpha[t + 1] -= c;
        alpha[t + 2] += c;
        let combo = LinearCombination { alpha, beta };
        let check = engine::linear_transfer_check(&combo);
        assert!(check.premise_holds, "construction satisfies the scalar premise: {combo:?}");
        assert!(check.conclusion_holds, "{combo:?}");
        premise_seen += 1;
    }
    assert!(premise_seen >= 100);

    let lone = engine::linear_transfer_check(&LinearCombination { alpha: vec![1], beta: vec![] });
    assert!(!lone.premise_holds);
}

#[test]
fn million_index_fibonacci_is_fast_and_sized_right() {
    let start = Instant::now();
    let value = fib(1_000_000);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "fib(10^6) took {elapsed:?}");

    let digits = value.to_string().len();
    assert_eq!(digits, 208_988);
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let estimate = (1e6 * phi.log10() - 5f64.sqrt().log10()).floor() as usize + 1;
    assert_eq!(estimate, digits, "digit count agrees with the closed-form estimate");
}
