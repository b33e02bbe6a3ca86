//! `bifib`: value tables, identity verification, ad hoc expression
//! evaluation, and a fast-doubling benchmark.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check FAILs
//! but reporting succeeded, 2 on usage, parse, or evaluation errors.
//! Results go to standard output, diagnostics to standard error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use bifib_core::bifib::{bf, bf_real_radicand, bl};
use bifib_core::engine::{self, ParamGrid, Verdict};
use bifib_core::idlang;
use bifib_core::sequences::{fib, fib_pair_oracle, lucas};
use bifib_core::Bicomplex;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "bifib", version, about = "Bicomplex Fibonacci toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print F, L, BF, BL and the BF modulus radicand for an index range.
    Table(TableArgs),
    /// Check cataloged identities over parameter grids.
    Verify(VerifyArgs),
    /// Evaluate an expression, or check an `lhs == rhs` equation, at given
    /// variable values.
    Eval(EvalArgs),
    /// Time fib(n) by fast doubling against the iterative oracle.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Args)]
struct TableArgs {
    /// First index, inclusive.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    from: i64,
    /// Last index, inclusive.
    #[arg(long, allow_hyphen_values = true, default_value = "10")]
    to: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id to check; repeatable. Defaults to the whole catalog.
    #[arg(long = "claim", value_name = "ID", conflicts_with = "all")]
    claims: Vec<String>,
    /// Check every cataloged claim.
    #[arg(long)]
    all: bool,
    /// Range for parameter n, written `a..b` (inclusive) or as one value.
    #[arg(long, allow_hyphen_values = true, value_name = "RANGE")]
    n: Option<RangeArg>,
    /// Range for parameter m.
    #[arg(long, allow_hyphen_values = true, value_name = "RANGE")]
    m: Option<RangeArg>,
    /// Range for parameter r.
    #[arg(long, allow_hyphen_values = true, value_name = "RANGE")]
    r: Option<RangeArg>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Also write the JSON report to this path.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// Expression, or equation `lhs == rhs`.
    #[arg(allow_hyphen_values = true)]
    expression: String,
    /// Value for the variable n.
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    /// Value for the variable m.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    /// Value for the variable r.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<i64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// Sequence index to compute.
    #[arg(long)]
    n: u64,
}

/// Inclusive integer range, parsed from `a..b` or a single value.
#[derive(Clone, Copy, Debug)]
struct RangeArg {
    from: i64,
    to: i64,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let int = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("invalid integer `{t}`"));
        match s.split_once("..") {
            Some((a, b)) => Ok(RangeArg { from: int(a)?, to: int(b)? }),
            None => {
                let v = int(s)?;
                Ok(RangeArg { from: v, to: v })
            }
        }
    }
}

#[derive(Serialize)]
struct ValueWire {
    re: String,
    i: String,
    j: String,
    k: String,
}

impl From<&Bicomplex<BigInt>> for ValueWire {
    fn from(v: &Bicomplex<BigInt>) -> Self {
        ValueWire {
            re: v.w.to_string(),
            i: v.x.to_string(),
            j: v.y.to_string(),
            k: v.z.to_string(),
        }
    }
}

#[derive(Serialize)]
struct TableRow {
    n: String,
    #[serde(rename = "F")]
    fib: String,
    #[serde(rename = "L")]
    lucas: String,
    #[serde(rename = "BF")]
    bf: ValueWire,
    #[serde(rename = "BL")]
    bl: ValueWire,
    radicand: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Eval(a) => cmd_eval(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn cmd_table(a: TableArgs) -> Result<ExitCode, String> {
    if a.from > a.to {
        return Err(format!("empty index range {}..{}", a.from, a.to));
    }
    match a.format {
        Format::Csv => {
            println!("n,F,L,BF_re,BF_i,BF_j,BF_k,BL_re,BL_i,BL_j,BL_k,radicand");
            for n in a.from..=a.to {
                let (f, l) = (bf(n), bl(n));
                println!(
                    "{n},{},{},{},{},{},{},{},{},{},{},{}",
                    fib(n),
                    lucas(n),
                    f.w,
                    f.x,
                    f.y,
                    f.z,
                    l.w,
                    l.x,
                    l.y,
                    l.z,
                    bf_real_radicand(n)
                );
            }
        }
        Format::Json => {
            let rows: Vec<TableRow> = (a.from..=a.to)
                .map(|n| TableRow {
                    n: n.to_string(),
                    fib: fib(n).to_string(),
                    lucas: lucas(n).to_string(),
                    bf: (&bf(n)).into(),
                    bl: (&bl(n)).into(),
                    radicand: bf_real_radicand(n).to_string(),
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).expect("table rows serialize"));
        }
        Format::Text => {
            for n in a.from..=a.to {
                let radicand = bf_real_radicand(n);
                println!("n = {n}   F = {}   L = {}", fib(n), lucas(n));
                println!("    BF = {}", bf(n));
                println!("    BL = {}", bl(n));
                println!("    |BF| = sqrt({radicand}) \u{2248} {}", approx_sqrt(&radicand));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode, String> {
    let ids: Vec<&str> = if a.claims.is_empty() {
        engine::catalog().iter().map(|c| c.id).collect()
    } else {
        a.claims.iter().map(|s| s.as_str()).collect()
    };
    let mut overrides = BTreeMap::new();
    for (name, range) in [("n", a.n), ("m", a.m), ("r", a.r)] {
        if let Some(range) = range {
            if range.from > range.to {
                return Err(format!("empty range {}..{} for --{name}", range.from, range.to));
            }
            overrides.insert(name.to_string(), (range.from, range.to));
        }
    }
    let report = engine::run_claims(&ids, &overrides).map_err(|e| e.to_string())?;
    let json = report.to_json_string();
    match a.format {
        Format::Json => println!("{json}"),
        Format::Csv => {
            println!("claim_id,verdict,points_checked,counterexample");
            for claim in &report.claims {
                let at = claim
                    .first_counterexample
                    .as_ref()
                    .map(|cx| {
                        cx.bindings
                            .iter()
                            .map(|(name, value)| format!("{name}={value}"))
                            .collect::<Vec<_>>()
                            .join(";")
                    })
                    .unwrap_or_default();
                println!(
                    "{},{},{},{at}",
                    claim.claim_id,
                    claim.verdict.as_str(),
                    claim.points_checked
                );
            }
        }
        Format::Text => {
            for claim in &report.claims {
                println!(
                    "{:<8} {:<4} {:>8} points   {}",
                    claim.claim_id,
                    claim.verdict.as_str(),
                    claim.points_checked,
                    claim.citation
                );
                if let Some(cx) = &claim.first_counterexample {
                    println!("         counterexample at {}:", cx.bindings);
                    println!("           lhs      = {}", cx.lhs);
                    println!("           rhs      = {}", cx.rhs);
                    println!("           residual = {}", cx.residual);
                }
            }
            let (pass, fail) = report.counts();
            println!();
            println!("{} claims: {pass} PASS, {fail} FAIL", report.claims.len());
        }
    }
    if let Some(path) = &a.out {
        std::fs::write(path, json.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_eval(a: EvalArgs) -> Result<ExitCode, String> {
    let mut bindings = engine::Bindings::new();
    for (name, value) in [("n", a.n), ("m", a.m), ("r", a.r)] {
        if let Some(value) = value {
            bindings.set(name, value);
        }
    }
    if a.expression.contains("==") {
        return check_equation_at(&a.expression, &bindings, a.format);
    }
    let expr = idlang::parse(&a.expression).map_err(|e| e.to_string())?;
    let value = idlang::eval_expr(&expr, &bindings).map_err(|e| e.to_string())?;
    match a.format {
        Format::Text => println!("{value}"),
        Format::Json => {
            let wire = ValueWire::from(&value);
            println!("{}", serde_json::to_string_pretty(&wire).expect("value serializes"));
        }
        Format::Csv => {
            println!("re,i,j,k");
            println!("{},{},{},{}", value.w, value.x, value.y, value.z);
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Check an equation at the single point given by the bindings. Free
/// variables missing from the bindings are reported as usage errors.
fn check_equation_at(
    text: &str,
    bindings: &engine::Bindings,
    format: Format,
) -> Result<ExitCode, String> {
    let mut grid = ParamGrid::new();
    for (name, value) in bindings.iter() {
        grid.set_range(name, value, value);
    }
    let report = idlang::check_equation(text, &grid).map_err(|e| e.to_string())?;
    match format {
        Format::Json => println!("{}", report.to_json_string()),
        Format::Csv => {
            println!("verdict,points_checked");
            println!("{},{}", report.verdict.as_str(), report.points_checked);
        }
        Format::Text => match &report.first_counterexample {
            None => {
                let at: Vec<String> =
                    report.grid.iter().map(|(name, (from, _))| format!("{name} = {from}")).collect();
                if at.is_empty() {
                    println!("PASS");
                } else {
                    println!("PASS at {}", at.join(", "));
                }
            }
            Some(cx) => {
                if cx.bindings.is_empty() {
                    println!("FAIL:");
                } else {
                    println!("FAIL at {}:", cx.bindings);
                }
                println!("  lhs      = {}", cx.lhs);
                println!("  rhs      = {}", cx.rhs);
                println!("  residual = {}", cx.residual);
            }
        },
    }
    Ok(if report.verdict == Verdict::Pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_bench(a: BenchArgs) -> Result<ExitCode, String> {
    const ITERATIVE_LIMIT: u64 = 100_000;
    let index = i64::try_from(a.n).map_err(|_| format!("index {} out of range", a.n))?;
    let start = Instant::now();
    let fast = fib(index);
    let fast_time = start.elapsed();
    println!("fib({})", a.n);
    println!("  fast doubling: {fast_time:?}");
    if a.n <= ITERATIVE_LIMIT {
        let start = Instant::now();
        let (slow, _) = fib_pair_oracle(index).map_err(|e| e.to_string())?;
        let slow_time = start.elapsed();
        if slow != fast {
            return Err("iterative and doubling values disagree".to_string());
        }
        println!("  iterative:     {slow_time:?} (agrees)");
    } else {
        println!("  iterative:     skipped (n > {ITERATIVE_LIMIT})");
    }
    let value = fast.to_string();
    println!("  digit count: {}", value.len());
    if value.len() <= 40 {
        println!("  value: {value}");
    }
    Ok(ExitCode::SUCCESS)
}

/// 15-significant-digit decimal approximation of the square root of a
/// nonnegative integer. Plain notation while the integer part stays within
/// 15 digits, scientific `m.mmm…eE` beyond.
fn approx_sqrt(radicand: &BigInt) -> String {
    if radicand.is_zero() {
        return "0".to_string();
    }
    let scaled = radicand * BigInt::from(10u32).pow(34);
    let digits = scaled.sqrt().to_string();
    let int_len = digits.len() as i64 - 17;
    let (mantissa, carry) = round_sig(&digits, 15);
    let exp = int_len - 1 + carry;
    if (0..=14).contains(&exp) {
        let cut = (exp + 1) as usize;
        if cut == mantissa.len() {
            mantissa
        } else {
            format!("{}.{}", &mantissa[..cut], &mantissa[cut..])
        }
    } else {
        format!("{}.{}e{exp}", &mantissa[..1], &mantissa[1..])
    }
}

/// First `sig` significant digits of a digit string, rounded half away
/// from zero. The second value is 1 when rounding carried past the leading
/// digit (999… became 100…), else 0.
fn round_sig(digits: &str, sig: usize) -> (String, i64) {
    let bytes = digits.as_bytes();
    debug_assert!(bytes.len() > sig);
    let mut kept = bytes[..sig].to_vec();
    if bytes[sig] >= b'5' {
        let mut i = sig;
        loop {
            if i == 0 {
                kept.fill(b'0');
                kept[0] = b'1';
                return (String::from_utf8(kept).expect("ascii digits"), 1);
            }
            i -= 1;
            if kept[i] == b'9' {
                kept[i] = b'0';
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    (String::from_utf8(kept).expect("ascii digits"), 0)
}
