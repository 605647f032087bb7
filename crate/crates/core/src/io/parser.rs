//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar:
//!   expr   := ['-'|'+'] term (('+'|'-') term)*
//!   term   := factor ('*' factor)*
//!   factor := base ('^' uint)?
//!   base   := 'x' | 'y' | 'z' | int | '(' expr ')'
//!
//! Implicit multiplication is not allowed; whitespace is ignored. Errors
//! carry the byte position of the offending character.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Rational, Var};

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

pub fn parse_poly(text: &str) -> Result<MultiPoly> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.input.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        // Leading sign, so equations can start with a negative term.
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
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
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.uint()?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(MultiPoly::var(Var::X))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(MultiPoly::var(Var::Y))
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(MultiPoly::var(Var::Z))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                let n: BigInt = digits.parse().expect("digits parse as integer");
                Ok(MultiPoly::constant(Rational::from_integer(n)))
            }
            Some(_) => Err(self.err("expected variable, integer, or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a nonnegative integer exponent"));
        }
        let digits = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        digits.parse::<u32>().map_err(|_| Error::Syntax {
            pos: start,
            msg: "exponent out of range".to_string(),
        })
    }
}
