//! Lexer and recursive-descent parser.
//!
//! Errors carry the byte offset of the offending token plus the set of
//! token classes that would have been accepted there.

use super::ast::{Expr, IndexExpr, SeqKind};
use super::ParseError;
use crate::bicomplex::Axis;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    EqEq,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("integer `{v}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".to_string(),
            Tok::Minus => "`-`".to_string(),
            Tok::Star => "`*`".to_string(),
            Tok::Caret => "`^`".to_string(),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
            Tok::LBracket => "`[`".to_string(),
            Tok::RBracket => "`]`".to_string(),
            Tok::EqEq => "`==`".to_string(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let start = pos;
        match bytes[pos] {
            b' ' | b'\t' | b'\r' | b'\n' => pos += 1,
            b'+' => {
                toks.push((Tok::Plus, start));
                pos += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, start));
                pos += 1;
            }
            b'*' => {
                toks.push((Tok::Star, start));
                pos += 1;
            }
            b'^' => {
                toks.push((Tok::Caret, start));
                pos += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, start));
                pos += 1;
            }
            b')' => {
                toks.push((Tok::RParen, start));
                pos += 1;
            }
            b'[' => {
                toks.push((Tok::LBracket, start));
                pos += 1;
            }
            b']' => {
                toks.push((Tok::RBracket, start));
                pos += 1;
            }
            b'=' => {
                if bytes.get(pos + 1) == Some(&b'=') {
                    toks.push((Tok::EqEq, start));
                    pos += 2;
                } else {
                    return Err(ParseError::Syntax {
                        offset: start,
                        expected: vec!["`==`"],
                        found: "`=`".to_string(),
                    });
                }
            }
            b'0'..=b'9' => {
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let literal = &text[start..pos];
                let value = literal.parse::<i64>().map_err(|_| ParseError::Syntax {
                    offset: start,
                    expected: vec!["integer fitting in 64 bits"],
                    found: format!("oversized integer `{literal}`"),
                })?;
                toks.push((Tok::Int(value), start));
            }
            b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                while pos < bytes.len()
                    && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                toks.push((Tok::Ident(text[start..pos].to_string()), start));
            }
            _ => {
                let ch = text[start..].chars().next().expect("offset is on a char boundary");
                return Err(ParseError::Syntax {
                    offset: start,
                    expected: vec![
                        "integer",
                        "identifier",
                        "`+`",
                        "`-`",
                        "`*`",
                        "`^`",
                        "`(`",
                        "`)`",
                        "`[`",
                        "`]`",
                        "`==`",
                    ],
                    found: format!("`{ch}`"),
                });
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

const ATOM_EXPECTED: &[&str] = &["integer", "unit `i`/`j`/`k`", "sequence term", "`(`", "`-`"];
const IVAR_EXPECTED: &[&str] = &["integer", "`n`", "`m`", "`r`", "`(`", "`-`"];

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn found(&self) -> String {
        self.toks
            .get(self.pos)
            .map_or_else(|| "end of input".to_string(), |(t, _)| t.describe())
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            expected: expected.to_vec(),
            found: self.found(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn overflow(&self, offset: usize) -> ParseError {
        ParseError::Syntax {
            offset,
            expected: vec!["index expression fitting in 64 bits"],
            found: "arithmetic overflow".to_string(),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    e = Expr::Add(Box::new(e), Box::new(self.parse_term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    e = Expr::Sub(Box::new(e), Box::new(self.parse_term()?));
                }
                _ => return Ok(e),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.parse_factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            e = Expr::Mul(Box::new(e), Box::new(self.parse_factor()?));
        }
        Ok(e)
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.parse_factor()?)));
        }
        let atom = self.parse_atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let exp = self.parse_exponent()?;
            return Ok(Expr::Pow(Box::new(atom), exp));
        }
        Ok(atom)
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        let tok = match self.peek() {
            Some(t) => t.clone(),
            None => return Err(self.error(ATOM_EXPECTED)),
        };
        match tok {
            Tok::Int(v) => {
                self.pos += 1;
                Ok(Expr::Int(v))
            }
            Tok::Ident(name) => match name.as_str() {
                "i" => {
                    self.pos += 1;
                    Ok(Expr::Unit(Axis::I))
                }
                "j" => {
                    self.pos += 1;
                    Ok(Expr::Unit(Axis::J))
                }
                "k" => {
                    self.pos += 1;
                    Ok(Expr::Unit(Axis::K))
                }
                _ => {
                    if let Some(kind) = SeqKind::from_name(&name) {
                        self.pos += 1;
                        self.expect(Tok::LBracket, "`[`")?;
                        let idx = self.parse_intexp()?;
                        self.expect(Tok::RBracket, "`]`")?;
                        Ok(Expr::Seq(kind, idx))
                    } else if matches!(self.toks.get(self.pos + 1), Some((Tok::LBracket, _))) {
                        Err(ParseError::UnknownSequenceKind { offset, name })
                    } else {
                        Err(self.error(ATOM_EXPECTED))
                    }
                }
            },
            Tok::LParen => {
                self.pos += 1;
                let e = self.parse_expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::Paren(Box::new(e)))
            }
            _ => Err(self.error(ATOM_EXPECTED)),
        }
    }

    fn parse_exponent(&mut self) -> Result<IndexExpr, ParseError> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(IndexExpr::constant(v))
            }
            Some(Tok::Ident(name)) if matches!(name.as_str(), "n" | "m" | "r") => {
                let idx = IndexExpr::var(name);
                self.pos += 1;
                Ok(idx)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let idx = self.parse_intexp()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(idx)
            }
            _ => Err(self.error(&["integer", "`n`", "`m`", "`r`", "`(`"])),
        }
    }

    fn parse_intexp(&mut self) -> Result<IndexExpr, ParseError> {
        let mut acc = self.parse_iterm()?;
        loop {
            let offset = self.offset();
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.parse_iterm()?;
                    acc = acc.checked_add(&rhs).ok_or_else(|| self.overflow(offset))?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.parse_iterm()?;
                    let neg = rhs.checked_neg().ok_or_else(|| self.overflow(offset))?;
                    acc = acc.checked_add(&neg).ok_or_else(|| self.overflow(offset))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_iterm(&mut self) -> Result<IndexExpr, ParseError> {
        let mut acc = self.parse_ifactor()?;
        while self.peek() == Some(&Tok::Star) {
            let star = self.offset();
            self.pos += 1;
            let rhs = self.parse_ifactor()?;
            acc = if acc.is_constant() {
                rhs.checked_scale(acc.constant).ok_or_else(|| self.overflow(star))?
            } else if rhs.is_constant() {
                acc.checked_scale(rhs.constant).ok_or_else(|| self.overflow(star))?
            } else {
                return Err(ParseError::NonLinearIndex { offset: star });
            };
        }
        Ok(acc)
    }

    fn parse_ifactor(&mut self) -> Result<IndexExpr, ParseError> {
        let offset = self.offset();
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                let inner = self.parse_ifactor()?;
                inner.checked_neg().ok_or_else(|| self.overflow(offset))
            }
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(IndexExpr::constant(v))
            }
            Some(Tok::Ident(name)) if matches!(name.as_str(), "n" | "m" | "r") => {
                let idx = IndexExpr::var(name);
                self.pos += 1;
                Ok(idx)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let idx = self.parse_intexp()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(idx)
            }
            _ => Err(self.error(IVAR_EXPECTED)),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }
}

fn parser_for(text: &str) -> Result<Parser, ParseError> {
    Ok(Parser { toks: lex(text)?, pos: 0, end: text.len() })
}

/// Parse a single expression; all input must be consumed.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = parser_for(text)?;
    let e = p.parse_expr()?;
    p.expect_end()?;
    Ok(e)
}

/// Parse an equation `lhs == rhs`.
pub fn parse_equation(text: &str) -> Result<(Expr, Expr), ParseError> {
    let mut p = parser_for(text)?;
    let lhs = p.parse_expr()?;
    p.expect(Tok::EqEq, "`==`")?;
    let rhs = p.parse_expr()?;
    p.expect_end()?;
    Ok((lhs, rhs))
}
