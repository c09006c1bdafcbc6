//! Recursive-descent reader for the canonical polynomial text format.
//!
//! Grammar: sums and differences of products of powers; atoms are integers,
//! fractions `p/q`, parenthesised expressions and variables written as in
//! the renderer (`x_{i,j}`, `x`, `y`, `t`, `g_i`, `L_i`).

use num_bigint::BigInt;

use super::rational::Rational;
use super::{MultiPoly, Var};
use crate::error::{HessexError, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub(crate) fn parse_poly(text: &str) -> Result<MultiPoly> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0 };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn error(&self, what: &str) -> HessexError {
        HessexError::Parse(format!("{what} at offset {} in {:?}", self.pos, String::from_utf8_lossy(self.src)))
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.digits()?;
            let e: u32 = e.parse().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn index(&mut self) -> Result<u32> {
        let d = self.digits()?;
        d.parse().map_err(|_| self.error("index too large"))
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits()?.parse().map_err(|_| self.error("bad integer"))?;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den: BigInt = self.digits()?.parse().map_err(|_| self.error("bad integer"))?;
                    if den == BigInt::from(0) {
                        return Err(self.error("zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(MultiPoly::constant(value))
            }
            Some(c) if c.is_ascii_alphabetic() => Ok(MultiPoly::var(self.variable()?)),
            _ => Err(self.error("expected a term")),
        }
    }

    fn variable(&mut self) -> Result<Var> {
        let c = self.src[self.pos];
        self.pos += 1;
        let subscripted = self.src.get(self.pos) == Some(&b'_');
        match (c, subscripted) {
            (b'x', true) => {
                self.pos += 1;
                self.expect(b'{')?;
                let i = self.index()?;
                self.expect(b',')?;
                let j = self.index()?;
                self.expect(b'}')?;
                Ok(Var::X(i, j))
            }
            (b'g', true) => {
                self.pos += 1;
                Ok(Var::Gamma(self.index()?))
            }
            (b'L', true) => {
                self.pos += 1;
                Ok(Var::L(self.index()?))
            }
            (b'x', false) => Ok(Var::PetX),
            (b'y', false) => Ok(Var::PetY),
            (b't', false) => Ok(Var::T),
            _ => {
                self.pos -= 1;
                Err(self.error("unknown variable"))
            }
        }
    }
}
