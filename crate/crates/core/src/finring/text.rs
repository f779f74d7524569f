//! Canonical text form of ring elements.
//!
//! `Z_m` residues print as decimals, `GF(p^k)` elements as coefficient tuples
//! low-degree-first such as `(1,0,2)`, and elements of `R x R` or `D(R)` as `(x,y)`
//! with `x`, `y` in the inner ring's form. The parser also accepts a bare (possibly
//! negative) integer `n` in any ring, meaning `n * 1`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::ring::{Elem, Kind, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Term {
    Int(i64),
    Tuple(Vec<Term>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn term(&mut self) -> Result<Term> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let mut items = alloc::vec![self.term()?];
                loop {
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                            items.push(self.term()?);
                        }
                        Some(b')') => {
                            self.pos += 1;
                            return Ok(Term::Tuple(items));
                        }
                        _ => return Err(self.error("expected ',' or ')'")),
                    }
                }
            }
            Some(c) if c == b'-' || c == b'+' || c.is_ascii_digit() => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = core::str::from_utf8(&self.src[start..self.pos])
                    .map_err(|_| self.error("invalid utf-8"))?;
                text.parse::<i64>()
                    .map(Term::Int)
                    .map_err(|_| self.error("invalid integer"))
            }
            _ => Err(self.error("expected an integer or '('")),
        }
    }
}

impl Ring {
    pub fn format(&self, e: Elem) -> String {
        match self.kind() {
            Kind::Zmod { .. } => e.index().to_string(),
            Kind::Galois { .. } => {
                let coeffs = self.galois_coefficients(e);
                let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                format!("({})", parts.join(","))
            }
            Kind::Product(r) | Kind::Dual(r) => {
                let (x, y) = self.components(e);
                format!("({},{})", r.format(x), r.format(y))
            }
        }
    }

    pub fn parse(&self, text: &str) -> Result<Elem> {
        let mut parser = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let term = parser.term()?;
        if parser.peek().is_some() {
            return Err(parser.error("trailing input"));
        }
        self.interpret(&term)
            .map_err(|e| match e {
                Error::Parse(msg) => Error::Parse(format!("{msg} in element '{text}'")),
                other => other,
            })
    }

    fn interpret(&self, term: &Term) -> Result<Elem> {
        match (term, self.kind()) {
            (Term::Int(n), _) => Ok(self.from_int(*n)),
            (Term::Tuple(items), Kind::Galois { p, degree, .. }) => {
                if items.len() != *degree as usize {
                    return Err(Error::Parse(format!(
                        "expected {degree} coefficients for {self}"
                    )));
                }
                let mut coeffs = Vec::with_capacity(items.len());
                for item in items {
                    match item {
                        Term::Int(c) => coeffs.push(c.rem_euclid(*p as i64) as u32),
                        Term::Tuple(_) => {
                            return Err(Error::Parse("nested tuple in a Galois element".into()))
                        }
                    }
                }
                Ok(self.galois_from_coefficients(&coeffs))
            }
            (Term::Tuple(items), Kind::Product(r) | Kind::Dual(r)) => {
                if items.len() != 2 {
                    return Err(Error::Parse(format!("expected a pair for {self}")));
                }
                let x = r.interpret(&items[0])?;
                let y = r.interpret(&items[1])?;
                Ok(self.pair(x, y))
            }
            (Term::Tuple(_), Kind::Zmod { .. }) => {
                Err(Error::Parse(format!("tuple given for {self}")))
            }
        }
    }
}
