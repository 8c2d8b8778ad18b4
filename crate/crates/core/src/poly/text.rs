//! Canonical text form: terms in decreasing monomial order, e.g.
//! `-1/4*a0*wp[1,1,1]^2 + 3*x - 7`.
//!
//! The parser accepts a superset: `+ - * / ^`, parentheses and integer
//! literals. Division is only allowed by a nonzero constant.

use std::fmt::Write as _;

use num_bigint::BigInt;

use super::{Monomial, Poly};
use crate::rational::Rational;
use crate::symbol::Symbol;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

pub(super) fn to_text(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            let _ = write!(out, "{abs}");
        } else if abs.is_one() {
            let _ = write!(out, "{m}");
        } else {
            let _ = write!(out, "{abs}*{m}");
        }
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    match d.as_constant() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                        _ => return self.err("division by a non-constant or zero"),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let e: u32 = match text.parse() {
                Ok(e) => e,
                Err(_) => return self.err("expected exponent"),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = text.parse().unwrap();
                Ok(Poly::constant(Rational::from_int(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                if self.src.get(self.pos) == Some(&b'[') {
                    while self.pos < self.src.len() && self.src[self.pos] != b']' {
                        self.pos += 1;
                    }
                    if self.pos == self.src.len() {
                        return self.err("unterminated '['");
                    }
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match text.parse::<Symbol>() {
                    Ok(s) => Ok(Poly::term(Monomial::var(s), Rational::one())),
                    Err(e) => {
                        self.pos = start;
                        self.err(e)
                    }
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(super) fn parse(s: &str) -> Result<Poly, ParseError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_examples() {
        let q = parse("-1/4*a0*wp[1,1,1]^2").unwrap();
        assert_eq!(to_text(&q), "-1/4*a0*wp[1,1,1]^2");
        let r = parse("7 - x*3 + (a1 + a0)^2/2").unwrap();
        assert_eq!(to_text(&r), "1/2*a0^2 + a0*a1 + 1/2*a1^2 - 3*x + 7");
        assert_eq!(to_text(&Poly::zero()), "0");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("x +").is_err());
        assert!(parse("x / y").is_err());
        assert!(parse("q7").is_err());
        assert!(parse("(x").is_err());
    }
}
