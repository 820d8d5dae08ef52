//! Text syntax for polynomials.
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := integer ['^' natural] | identifier ['^' natural]
//! ```
//!
//! Whitespace is insignificant. An identifier run such as `xy` is split
//! into ring variables when it is not itself a variable name, and an
//! exponent binds to the last variable of the run. Integer coefficients
//! are reduced modulo `p`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnknownIdentifier(String),
    MalformedExponent,
    UnexpectedChar(char),
    UnexpectedEnd,
}

/// A parse failure at a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Empty => write!(f, "empty polynomial expression"),
            ParseErrorKind::UnknownIdentifier(name) => {
                write!(f, "unknown identifier `{name}` at position {}", self.position)
            }
            ParseErrorKind::MalformedExponent => {
                write!(f, "malformed exponent at position {}", self.position)
            }
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character `{c}` at position {}", self.position)
            }
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
        }
    }
}

impl core::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    ring: &'a Arc<Ring>,
}

fn ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_'
}

fn ident_continue(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

impl<'a> Parser<'a> {
    fn err(&self, kind: ParseErrorKind, position: usize) -> ParseError {
        ParseError { kind, position }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn unexpected(&self) -> ParseError {
        match self.src[self.pos..].chars().next() {
            Some(c) => self.err(ParseErrorKind::UnexpectedChar(c), self.pos),
            None => self.err(ParseErrorKind::UnexpectedEnd, self.pos),
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.err(ParseErrorKind::Empty, 0));
        }
        let field = *self.ring.field();
        let mut raw: Vec<(Monomial, u32)> = Vec::new();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            negate = true;
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            raw.push((m, if negate { field.neg(c) } else { c }));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => return Err(self.unexpected()),
            }
            self.pos += 1;
        }
        Ok(Polynomial::normalize(self.ring, raw))
    }

    fn term(&mut self) -> Result<(Monomial, u32), ParseError> {
        let mut exps = alloc::vec![0u32; self.ring.nvars()];
        let mut coeff = 1u32;
        self.factor(&mut exps, &mut coeff)?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.factor(&mut exps, &mut coeff)?;
                }
                Some(b) if b.is_ascii_digit() || ident_start(b) => {
                    self.factor(&mut exps, &mut coeff)?;
                }
                _ => break,
            }
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn natural(&mut self) -> Option<u64> {
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(b) = self.peek().filter(u8::is_ascii_digit) {
            v = v.checked_mul(10)?.checked_add((b - b'0') as u64)?;
            self.pos += 1;
        }
        (self.pos > start).then_some(v)
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        match self.natural() {
            Some(v) if v <= u32::MAX as u64 => Ok(v as u32),
            _ => Err(self.err(ParseErrorKind::MalformedExponent, at)),
        }
    }

    fn factor(&mut self, exps: &mut [u32], coeff: &mut u32) -> Result<(), ParseError> {
        self.skip_ws();
        let field = *self.ring.field();
        let start = self.pos;
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let mut c = 0u32;
                while let Some(d) = self.peek().filter(u8::is_ascii_digit) {
                    c = field.add(field.mul(c, field.from_u64(10)), field.from_u64((d - b'0') as u64));
                    self.pos += 1;
                }
                let e = self.exponent()?;
                *coeff = field.mul(*coeff, field.pow(c, e as u64));
                Ok(())
            }
            Some(b) if ident_start(b) => {
                while self.peek().is_some_and(ident_continue) {
                    self.pos += 1;
                }
                let vars = self.split_identifier(start, self.pos)?;
                let e = self.exponent()?;
                let last = vars.len() - 1;
                for (k, v) in vars.into_iter().enumerate() {
                    let add = if k == last { e } else { 1 };
                    exps[v] = exps[v]
                        .checked_add(add)
                        .ok_or_else(|| self.err(ParseErrorKind::MalformedExponent, start))?;
                }
                Ok(())
            }
            _ => Err(self.unexpected()),
        }
    }

    /// Split `src[start..end]` into variable names, preferring longer names.
    fn split_identifier(&self, start: usize, end: usize) -> Result<Vec<usize>, ParseError> {
        let word = &self.src[start..end];
        if let Some(i) = self.ring.var_index(word) {
            return Ok(alloc::vec![i]);
        }
        let mut furthest = 0;
        let mut out = Vec::new();
        if self.segment(word, 0, &mut out, &mut furthest) {
            return Ok(out);
        }
        let rest = &word[furthest..];
        let len = rest.bytes().take_while(|&b| ident_continue(b)).count().max(1);
        Err(self.err(
            ParseErrorKind::UnknownIdentifier(String::from(&rest[..len.min(rest.len())])),
            start + furthest,
        ))
    }

    fn segment(&self, word: &str, at: usize, out: &mut Vec<usize>, furthest: &mut usize) -> bool {
        *furthest = (*furthest).max(at);
        if at == word.len() {
            return true;
        }
        let mut candidates: Vec<(usize, usize)> = self
            .ring
            .vars()
            .iter()
            .enumerate()
            .filter(|(_, v)| word[at..].starts_with(v.as_str()))
            .map(|(i, v)| (v.len(), i))
            .collect();
        candidates.sort_by(|a, b| b.cmp(a));
        for (len, i) in candidates {
            out.push(i);
            if self.segment(word, at + len, out, furthest) {
                return true;
            }
            out.pop();
        }
        false
    }
}

/// Parse `text` into a polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial, ParseError> {
    Parser {
        src: text,
        bytes: text.as_bytes(),
        pos: 0,
        ring,
    }
    .polynomial()
}
