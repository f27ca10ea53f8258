//! Polynomial strings such as `3/2*t1^2*t2 - t1 + 1`.
//!
//! Grammar: sums of products of factors, where a factor is a rational
//! literal, a variable name, or a parenthesised expression, optionally raised
//! to a non-negative integer power.

use num_bigint::BigInt;

use super::polynomial::Polynomial;
use super::Rat;
use crate::error::{Error, Result};

pub fn parse_polynomial(text: &str, vars: &[String]) -> Result<Polynomial> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        vars,
    };
    let poly = p.sum()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::syntax(1, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Polynomial> {
        let n = self.vars.len();
        let mut acc = Polynomial::zero(n);
        let mut sign = 1;
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                sign = -1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.product()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                // implicit multiplication: `2x`, `x y`, `(a)(b)`
                Some(c) if c.is_alphanumeric() || c == '(' || c == '_' => {
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.factor()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error("expected a non-negative integer exponent"));
            }
            let e: u32 = self.chars[start..self.pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let n = self.vars.len();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rat::from_integer(num);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        return Err(self.error("zero denominator"));
                    }
                    value /= Rat::from_integer(den);
                }
                Ok(Polynomial::constant(n, value))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric()
                        || self.chars[self.pos] == '_'
                        || self.chars[self.pos] == '.')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::var(n, i)),
                    None => Err(Error::syntax(1, start + 1, format!("unknown variable `{name}`"))),
                }
            }
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("expected an integer"))
    }
}
