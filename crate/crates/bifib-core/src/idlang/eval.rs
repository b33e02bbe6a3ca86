//! Exact evaluation of expressions under integer bindings.

use super::ast::{Expr, IndexExpr, SeqKind};
use super::EvalError;
use crate::bicomplex::{Axis, Bicomplex};
use crate::bifib::{bf, bl};
use crate::engine::Bindings;
use crate::sequences::{fib, lucas};
use num_bigint::BigInt;
use std::collections::BTreeSet;

pub fn eval_index(idx: &IndexExpr, bindings: &Bindings) -> Result<i64, EvalError> {
    let mut acc = idx.constant as i128;
    for (name, coeff) in &idx.coeffs {
        let value = bindings
            .get(name)
            .ok_or_else(|| EvalError::UnboundVariable(name.clone()))?;
        acc += (*coeff as i128) * (value as i128);
    }
    i64::try_from(acc).map_err(|_| EvalError::IndexOverflow)
}

/// Evaluate to an exact integer bicomplex value. Negative exponents are
/// defined only when the base evaluates to the scalar 1 or -1.
pub fn eval_expr(e: &Expr, bindings: &Bindings) -> Result<Bicomplex<BigInt>, EvalError> {
    match e {
        Expr::Int(v) => Ok(Bicomplex::from_scalar(BigInt::from(*v))),
        Expr::Unit(Axis::I) => Ok(Bicomplex::unit_i()),
        Expr::Unit(Axis::J) => Ok(Bicomplex::unit_j()),
        Expr::Unit(Axis::K) => Ok(Bicomplex::unit_k()),
        Expr::Seq(kind, idx) => {
            let n = eval_index(idx, bindings)?;
            Ok(match kind {
                SeqKind::F => Bicomplex::from_scalar(fib(n)),
                SeqKind::L => Bicomplex::from_scalar(lucas(n)),
                SeqKind::BF => bf(n),
                SeqKind::BL => bl(n),
            })
        }
        Expr::Neg(x) => Ok(-eval_expr(x, bindings)?),
        Expr::Add(l, r) => Ok(eval_expr(l, bindings)? + eval_expr(r, bindings)?),
        Expr::Sub(l, r) => Ok(eval_expr(l, bindings)? - eval_expr(r, bindings)?),
        Expr::Mul(l, r) => Ok(eval_expr(l, bindings)? * eval_expr(r, bindings)?),
        Expr::Pow(base, exp) => {
            let e = eval_index(exp, bindings)?;
            let v = eval_expr(base, bindings)?;
            if e >= 0 {
                return Ok(v.pow(e as u64));
            }
            let one = Bicomplex::one();
            if v == one {
                Ok(one)
            } else if v == -&one {
                Ok(if e % 2 == 0 { one } else { -&one })
            } else {
                Err(EvalError::NegativePowerOfNonUnit(e))
            }
        }
        Expr::Paren(x) => eval_expr(x, bindings),
    }
}

/// Variables the expression reads, from indices and exponents alike.
pub fn free_vars(e: &Expr) -> BTreeSet<String> {
    fn walk(e: &Expr, out: &mut BTreeSet<String>) {
        match e {
            Expr::Int(..) | Expr::Unit(..) => {}
            Expr::Seq(_, idx) => out.extend(idx.vars().map(String::from)),
            Expr::Neg(x) | Expr::Paren(x) => walk(x, out),
            Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) => {
                walk(l, out);
                walk(r, out);
            }
            Expr::Pow(base, exp) => {
                walk(base, out);
                out.extend(exp.vars().map(String::from));
            }
        }
    }
    let mut out = BTreeSet::new();
    walk(e, &mut out);
    out
}
