//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := number | identifier | '(' expr ')'
//! ```
//!
//! Numbers are decimal literals with optional fraction and exponent.
//! Division is only allowed by nonzero constants.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use super::{MPoly, Ring};
use crate::exactnum::parse_rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < b.len() && (b[i].is_ascii_digit() || b[i] == b'.') {
                i += 1;
            }
            if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
                let mut j = i + 1;
                if j < b.len() && (b[j] == b'+' || b[j] == b'-') {
                    j += 1;
                }
                if j < b.len() && b[j].is_ascii_digit() {
                    while j < b.len() && b[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            out.push((start, Tok::Num(src[start..i].to_string())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ParseError { pos: i, msg: alloc::format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let pos = self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end);
        Err(ParseError { pos, msg: msg.into() })
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some((_, Tok::Op(c))) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.merge(&rhs, false) } else { acc.merge(&rhs, true) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            let op_at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            if op == '*' {
                acc = acc.mul_unchecked(&rhs);
            } else {
                match rhs.as_constant() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                    Some(_) => {
                        self.pos = op_at;
                        return self.err("division by zero");
                    }
                    None => {
                        self.pos = op_at;
                        return self.err("division by a non-constant");
                    }
                }
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly, ParseError> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly, ParseError> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let e = match self.toks.get(self.pos) {
                Some((_, Tok::Num(s))) => match s.parse::<u32>() {
                    Ok(e) if e <= u32::from(u16::MAX) => e,
                    _ => return self.err("exponent must be a small non-negative integer"),
                },
                _ => return self.err("expected an integer exponent"),
            };
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly, ParseError> {
        let Some((_, tok)) = self.toks.get(self.pos).cloned() else {
            return self.err("unexpected end of input");
        };
        match tok {
            Tok::Num(s) => {
                let v = match parse_rational(&s) {
                    Ok(v) => v,
                    Err(e) => return self.err(e.to_string()),
                };
                self.pos += 1;
                Ok(MPoly::constant(self.ring, v))
            }
            Tok::Ident(name) => match self.ring.index(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(MPoly::monomial(self.ring, super::Monomial::var(i), num_traits::One::one()))
                }
                None => self.err(alloc::format!("unknown variable {name:?}")),
            },
            Tok::Op('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Op(c) => self.err(alloc::format!("unexpected {c:?}")),
        }
    }
}

/// Parses `src` as a polynomial over `ring`.
pub fn parse_poly(ring: &Ring, src: &str) -> Result<MPoly, super::PolyError> {
    let toks = lex(src)?;
    let mut p = Parser { ring, toks, pos: 0, end: src.len() };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Ok(p.err("trailing input")?);
    }
    Ok(out)
}
