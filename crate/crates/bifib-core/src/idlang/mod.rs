//! A small expression language for stating identities over the integer
//! bicomplex ring.
//!
//! Grammar, in precedence order (tightest first): `^`, unary `-`, `*`,
//! binary `+`/`-`. Multiplication is always written `*`; juxtaposition does
//! not parse. Atoms are integer literals, the units `i`/`j`/`k`, sequence
//! terms `F[..]`, `L[..]`, `BF[..]`, `BL[..]`, and parenthesized
//! expressions. Indices and exponents are linear integer expressions over
//! the variables `n`, `m`, `r`; a negative exponent is meaningful only when
//! the base evaluates to 1 or -1.
//!
//! An equation `lhs == rhs` checked over a grid produces the same report
//! shape as a cataloged claim, so ad hoc identities and built-in ones are
//! verified by one walker.

mod ast;
mod eval;
mod parser;

pub use ast::{Expr, IndexExpr, SeqKind};
pub use eval::{eval_expr, free_vars};
pub use parser::{parse, parse_equation};

use crate::engine::{self, Bindings, ClaimReport, EngineError, ParamGrid, PointOutcome};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected_list(.expected))]
    Syntax { offset: usize, expected: Vec<&'static str>, found: String },
    #[error("unknown sequence kind `{name}` at byte {offset}")]
    UnknownSequenceKind { offset: usize, name: String },
    #[error("nonlinear index at byte {offset}: indices must be linear in n, m, r")]
    NonLinearIndex { offset: usize },
}

fn expected_list(items: &[&'static str]) -> String {
    match items {
        [] => "nothing".to_string(),
        [one] => (*one).to_string(),
        _ => format!("one of {}", items.join(", ")),
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("negative exponent {0} requires a base of 1 or -1")]
    NegativePowerOfNonUnit(i64),
    #[error("sequence index overflows 64 bits")]
    IndexOverflow,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum IdlangError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Domain(#[from] EngineError),
}

/// Check `lhs == rhs` over a grid. The grid must bind every free variable
/// of the equation; variables the equation does not use are ignored. An
/// equation with no free variables is checked at the single empty binding.
pub fn check_equation(text: &str, grid: &ParamGrid) -> Result<ClaimReport, IdlangError> {
    let (lhs, rhs) = parse_equation(text)?;
    let mut vars = free_vars(&lhs);
    vars.extend(free_vars(&rhs));
    let mut eff = ParamGrid::new();
    for var in &vars {
        let (from, to) = grid.range(var).ok_or_else(|| {
            IdlangError::Domain(EngineError::BindingOutOfDomain {
                claim: "adhoc".to_string(),
                detail: format!("grid does not bind free variable `{var}`"),
            })
        })?;
        if from > to {
            return Err(IdlangError::Domain(EngineError::BindingOutOfDomain {
                claim: "adhoc".to_string(),
                detail: format!("range {from}..{to} for `{var}` is empty"),
            }));
        }
        eff.set_range(var, from, to);
    }
    let mut eval = |b: &Bindings| -> Result<PointOutcome, EvalError> {
        let l = eval_expr(&lhs, b)?;
        let r = eval_expr(&rhs, b)?;
        let matched_form = if l == r { Some("rhs") } else { None };
        Ok(PointOutcome { matched_form, lhs: l, rhs: r })
    };
    engine::verify_grid("adhoc", text, &eff, None, &["rhs"], &mut eval)
        .map_err(IdlangError::Eval)
}
