//! Recursive-descent parser for the polynomial text format.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | var | var '^' uint | '(' expr ')'
//! var      := 'z' uint | 't'
//! rational := int | int '/' uint          (int is an optionally signed uint)
//! ```
//!
//! Whitespace is ignored and there is no implicit multiplication.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::coeff::{Coefficient, Rational};
use super::exponent::{Exponent, AMBIENT_CAP, EXPONENT_CAP};
use super::polynomial::{QPoly, TPoly};
use super::ratfunc::{RatFunc, UniPoly};
use super::PolyError;

/// Result of parsing: the scalar domain is parametric iff `t` occurs in the text.
#[derive(Clone, Debug, PartialEq)]
pub enum ParsedPoly {
    Rational(QPoly),
    Parametric(TPoly),
}

impl ParsedPoly {
    pub fn is_parametric(&self) -> bool {
        matches!(self, ParsedPoly::Parametric(_))
    }

    /// Widen to ℚ(t) coefficients.
    pub fn into_parametric(self) -> TPoly {
        match self {
            ParsedPoly::Rational(p) => p.to_parametric(),
            ParsedPoly::Parametric(p) => p,
        }
    }

    pub fn ambient(&self) -> usize {
        match self {
            ParsedPoly::Rational(p) => p.ambient(),
            ParsedPoly::Parametric(p) => p.ambient(),
        }
    }
}

/// Parse `text` as a polynomial in `z1,…,zn` (and optionally `t`).
pub fn parse_polynomial(text: &str, n: usize) -> Result<ParsedPoly, PolyError> {
    if n == 0 || n > AMBIENT_CAP {
        return Err(PolyError::AmbientCap { n });
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n,
        saw_t: false,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax("unexpected character"));
    }
    if p.saw_t {
        Ok(ParsedPoly::Parametric(poly))
    } else {
        Ok(ParsedPoly::Rational(
            poly.to_rational().expect("no t in text, so coefficients are rational"),
        ))
    }
}

/// Parse text that must not mention `t`.
pub fn parse_rational_polynomial(text: &str, n: usize) -> Result<QPoly, PolyError> {
    match parse_polynomial(text, n)? {
        ParsedPoly::Rational(p) => Ok(p),
        ParsedPoly::Parametric(_) => Err(PolyError::UnexpectedParameter),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
    saw_t: bool,
}

impl Parser<'_> {
    fn syntax(&self, msg: &str) -> PolyError {
        PolyError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn expr(&mut self) -> Result<TPoly, PolyError> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<TPoly, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let start = self.pos;
            let f = self.factor()?;
            acc = acc.mul(&f)?;
            if acc.terms().any(|(e, _)| e.entries().iter().any(|&a| a > EXPONENT_CAP)) {
                return Err(PolyError::ExponentCap { pos: start });
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<TPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'z') => {
                self.pos += 1;
                let idx_pos = self.pos;
                let idx = self
                    .uint_raw()
                    .ok_or_else(|| self.syntax("expected variable index after 'z'"))?;
                if idx.is_zero() || idx > BigInt::from(self.n) {
                    return Err(PolyError::VariableOutOfRange {
                        pos: idx_pos,
                        index: idx.to_string(),
                        n: self.n,
                    });
                }
                let i: usize = idx.try_into().expect("checked against n");
                let k = self.optional_power()?;
                Ok(TPoly::monomial(Exponent::unit(self.n, i - 1, k), RatFunc::one()))
            }
            Some(b't') => {
                self.pos += 1;
                self.saw_t = true;
                let k = self.optional_power()?;
                Ok(TPoly::constant(
                    self.n,
                    RatFunc::from_poly(UniPoly::term(Rational::one(), k as usize)),
                ))
            }
            Some(c) if c.is_ascii_digit() => self.rational(false),
            // A signed integer, as in `z1*-2`; a sign between terms never reaches here.
            Some(sign @ (b'-' | b'+')) => {
                self.pos += 1;
                match self.peek() {
                    Some(c) if c.is_ascii_digit() => self.rational(sign == b'-'),
                    _ => Err(self.syntax("expected a number after the sign")),
                }
            }
            Some(_) => Err(self.syntax("expected a number, variable or '('")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn rational(&mut self, negative: bool) -> Result<TPoly, PolyError> {
        let num = self.uint_raw().expect("digit present");
        let mut q = Rational::from_integer(num);
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den_pos = self.pos;
            let den = self.uint_raw().ok_or_else(|| self.syntax("expected denominator"))?;
            if den.is_zero() {
                return Err(PolyError::Syntax {
                    pos: den_pos,
                    msg: "zero denominator".into(),
                });
            }
            q /= Rational::from_integer(den);
        }
        if negative {
            q = -q;
        }
        Ok(TPoly::constant(self.n, RatFunc::from_rational(q)))
    }

    fn optional_power(&mut self) -> Result<u32, PolyError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let k = self
            .uint_raw()
            .ok_or_else(|| self.syntax("expected exponent after '^'"))?;
        if k > BigInt::from(EXPONENT_CAP) {
            return Err(PolyError::ExponentCap { pos: start });
        }
        Ok(k.try_into().expect("checked against cap"))
    }

    /// Digits starting at the current position (no leading whitespace skip
    /// inside the number).
    fn uint_raw(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).ok()?;
        s.parse().ok()
    }
}
