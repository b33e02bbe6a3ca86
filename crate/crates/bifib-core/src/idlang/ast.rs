//! Syntax tree and pretty-printer.
//!
//! Printing inserts parentheses only where precedence demands them, so a
//! parsed expression pretty-prints to text that reparses to the identical
//! tree. Hand-built trees print to value-equivalent text (a `Neg` of a sum
//! gains parentheses) but may normalize structure.

use crate::bicomplex::Axis;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqKind {
    F,
    L,
    BF,
    BL,
}

impl SeqKind {
    pub fn name(self) -> &'static str {
        match self {
            SeqKind::F => "F",
            SeqKind::L => "L",
            SeqKind::BF => "BF",
            SeqKind::BL => "BL",
        }
    }

    pub fn from_name(name: &str) -> Option<SeqKind> {
        match name {
            "F" => Some(SeqKind::F),
            "L" => Some(SeqKind::L),
            "BF" => Some(SeqKind::BF),
            "BL" => Some(SeqKind::BL),
            _ => None,
        }
    }
}

/// A linear integer form `constant + sum coeff * var`. Zero coefficients
/// are never stored, so structural equality is semantic equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndexExpr {
    pub constant: i64,
    pub coeffs: BTreeMap<String, i64>,
}

impl IndexExpr {
    pub fn constant(c: i64) -> Self {
        IndexExpr { constant: c, coeffs: BTreeMap::new() }
    }

    pub fn var(name: &str) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(name.to_string(), 1);
        IndexExpr { constant: 0, coeffs }
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.coeffs.keys().map(|s| s.as_str())
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let constant = self.constant.checked_add(other.constant)?;
        let mut coeffs = self.coeffs.clone();
        for (name, c) in &other.coeffs {
            let entry = coeffs.entry(name.clone()).or_insert(0);
            *entry = entry.checked_add(*c)?;
        }
        coeffs.retain(|_, c| *c != 0);
        Some(IndexExpr { constant, coeffs })
    }

    pub fn checked_neg(&self) -> Option<Self> {
        self.checked_scale(-1)
    }

    pub fn checked_scale(&self, k: i64) -> Option<Self> {
        let constant = self.constant.checked_mul(k)?;
        let mut coeffs = BTreeMap::new();
        for (name, c) in &self.coeffs {
            let scaled = c.checked_mul(k)?;
            if scaled != 0 {
                coeffs.insert(name.clone(), scaled);
            }
        }
        Some(IndexExpr { constant, coeffs })
    }
}

impl fmt::Display for IndexExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "{}", self.constant);
        }
        let mut first = true;
        for (name, c) in &self.coeffs {
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else if *c < 0 {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{name}")?;
            first = false;
        }
        if self.constant > 0 {
            write!(f, "+{}", self.constant)?;
        } else if self.constant < 0 {
            write!(f, "-{}", self.constant.unsigned_abs())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Unit(Axis),
    Seq(SeqKind, IndexExpr),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, IndexExpr),
    Paren(Box<Expr>),
}

fn unit_symbol(axis: Axis) -> &'static str {
    match axis {
        Axis::I => "i",
        Axis::J => "j",
        Axis::K => "k",
    }
}

/// Binding strength: sums 1, products 2, unary minus 3, powers 4, atoms 5.
fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Neg(..) => 3,
        Expr::Pow(..) => 4,
        Expr::Int(..) | Expr::Unit(..) | Expr::Seq(..) | Expr::Paren(..) => 5,
    }
}

fn fmt_at(e: &Expr, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if precedence(e) < min {
        write!(f, "(")?;
        fmt_raw(e, f)?;
        write!(f, ")")
    } else {
        fmt_raw(e, f)
    }
}

fn fmt_exponent(idx: &IndexExpr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let bare_var = idx.constant == 0
        && idx.coeffs.len() == 1
        && idx.coeffs.values().next() == Some(&1);
    if bare_var || (idx.is_constant() && idx.constant >= 0) {
        write!(f, "{idx}")
    } else {
        write!(f, "({idx})")
    }
}

fn fmt_raw(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Int(v) => write!(f, "{v}"),
        Expr::Unit(axis) => write!(f, "{}", unit_symbol(*axis)),
        Expr::Seq(kind, idx) => write!(f, "{}[{idx}]", kind.name()),
        Expr::Neg(x) => {
            write!(f, "-")?;
            fmt_at(x, 3, f)
        }
        Expr::Add(l, r) => {
            fmt_at(l, 1, f)?;
            write!(f, " + ")?;
            fmt_at(r, 2, f)
        }
        Expr::Sub(l, r) => {
            fmt_at(l, 1, f)?;
            write!(f, " - ")?;
            fmt_at(r, 2, f)
        }
        Expr::Mul(l, r) => {
            fmt_at(l, 2, f)?;
            write!(f, "*")?;
            fmt_at(r, 3, f)
        }
        Expr::Pow(base, exp) => {
            // A bare negative literal would rebind as -(v^e) on reparse.
            if matches!(**base, Expr::Int(v) if v < 0) {
                write!(f, "(")?;
                fmt_raw(base, f)?;
                write!(f, ")")?;
            } else {
                fmt_at(base, 5, f)?;
            }
            write!(f, "^")?;
            fmt_exponent(exp, f)
        }
        Expr::Paren(x) => {
            write!(f, "(")?;
            fmt_at(x, 0, f)?;
            write!(f, ")")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_at(self, 0, f)
    }
}
