//! Integer-coefficient polynomials in a fixed list of variables, used as the
//! input syntax for ring relations.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! poly   := ["+" | "-"] term { ("+" | "-") term }
//! term   := factor { "*" factor }
//! factor := int | var [ "^" int ]
//! ```

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A normalized polynomial: no zero coefficients, no repeated exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    /// Keyed by exponent vector; coefficients are nonzero.
    terms: BTreeMap<Vec<u32>, i64>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (i64, Vec<u32>)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars, "exponent vector has wrong length");
            p.add_term(c, e);
        }
        p
    }

    fn add_term(&mut self, coeff: i64, exps: Vec<u32>) {
        let slot = self.terms.entry(exps).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(coefficient, exponents)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &[u32])> + '_ {
        self.terms.iter().map(|(e, c)| (*c, e.as_slice()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Parses `text` against the declared variable names.
    pub fn parse(text: &str, vars: &[String]) -> Result<Self> {
        Parser {
            src: text,
            pos: 0,
            vars,
        }
        .poly()
    }

    pub fn display<'a>(&'a self, vars: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, vars }
    }
}

struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    vars: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (c, e)) in self.poly.terms().rev().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mono = monomial_string(e, self.vars);
            match (mag, mono.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => write!(f, "{mono}")?,
                (_, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// `x^2*y` style rendering; empty string for the unit monomial.
pub fn monomial_string(exps: &[u32], vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (e, v) in exps.iter().zip(vars) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn err(&self, msg: impl ToString) -> Error {
        Error::syntax(format!("column {}", self.pos + 1), msg)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn poly(mut self) -> Result<Polynomial> {
        let n = self.vars.len();
        let mut out = Polynomial::zero(n);
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let (c, e) = self.term()?;
            out.add_term(sign * c, e);
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                break;
            }
        }
        if let Some(c) = self.peek() {
            return Err(self.err(format!("unexpected `{c}`")));
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(i64, Vec<u32>)> {
        let mut coeff: i64 = 1;
        let mut exps = vec![0u32; self.vars.len()];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let v = self.int()?;
                    coeff = coeff
                        .checked_mul(v)
                        .ok_or_else(|| self.err("coefficient overflow"))?;
                }
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let name = self.ident();
                    let idx = self
                        .vars
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| {
                            if name.is_empty() {
                                self.err("expected variable")
                            } else {
                                Error::UnknownVariable(name.clone())
                            }
                        })?;
                    let pow = if self.eat('^') { self.int()? } else { 1 };
                    let pow = u32::try_from(pow).map_err(|_| self.err("exponent too large"))?;
                    exps[idx] += pow;
                }
                Some(c) => return Err(self.err(format!("expected term, found `{c}`"))),
                None => return Err(self.err("expected term, found end of input")),
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok((coeff, exps))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if c.is_alphanumeric() || c == '_' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        self.src[start..self.pos].to_string()
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }
}
