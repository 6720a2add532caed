//! Bracket notation for finite and periodic continued fractions.
//!
//! ```text
//! cf     := "[" body "]"
//! body   := "(" terms ")"                        purely periodic
//!         | int ( (";" | ",") tail )?
//! tail   := term ("," term)* ("," "(" terms ")")?
//!         | "(" terms ")"
//! terms  := term ("," term)*
//! ```
//!
//! The repeating block is written in parentheses, e.g. `[1;(2)]` for
//! `sqrt 2` and `[(1)]` for the golden ratio. Only `a0` may be negative.
//! Whitespace is ignored. Output always uses `;` after `a0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::cf::FiniteCF;
use crate::surd::PeriodicCF;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    Syntax,
    Invariant,
}

/// A parse failure at byte offset `position` of the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{} error at position {position}: {message}", match .kind { ParseErrorKind::Syntax => "syntax", ParseErrorKind::Invariant => "invariant" })]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
    pub message: String,
}

/// Either kind of continued fraction the notation can express.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ContinuedFraction {
    Finite(FiniteCF),
    Periodic(PeriodicCF),
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContinuedFraction::Finite(cf) => cf.fmt(f),
            ContinuedFraction::Periodic(cf) => cf.fmt(f),
        }
    }
}

impl FromStr for ContinuedFraction {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_cf(s)
    }
}

impl From<FiniteCF> for ContinuedFraction {
    fn from(cf: FiniteCF) -> Self {
        ContinuedFraction::Finite(cf)
    }
}

impl From<PeriodicCF> for ContinuedFraction {
    fn from(cf: PeriodicCF) -> Self {
        ContinuedFraction::Periodic(cf)
    }
}

pub fn format_cf(cf: &ContinuedFraction) -> String {
    cf.to_string()
}

pub fn parse_cf(text: &str) -> Result<ContinuedFraction, ParseError> {
    Parser::new(text).parse()
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

/// An integer with the byte offset where it starts.
type Term = (BigInt, usize);

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn error(&self, kind: ParseErrorKind, position: usize, message: impl Into<String>) -> ParseError {
        // keep the offset inside the input even for end-of-input errors
        let position = position.min(self.src.len().saturating_sub(1));
        ParseError {
            kind,
            position,
            message: message.into(),
        }
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        self.error(ParseErrorKind::Syntax, self.pos, message)
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(found) => Err(self.syntax(format!("expected '{c}', found '{found}'"))),
            None => Err(self.syntax(format!("expected '{c}', found end of input"))),
        }
    }

    fn integer(&mut self) -> Result<Term, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if matches!(bytes.get(end), Some(b'-' | b'+')) {
            end += 1;
        }
        let digits_start = end;
        while bytes.get(end).is_some_and(u8::is_ascii_digit) {
            end += 1;
        }
        if end == digits_start {
            return Err(match self.peek() {
                Some(c) => self.syntax(format!("expected an integer, found '{c}'")),
                None => self.syntax("expected an integer, found end of input"),
            });
        }
        let value = BigInt::from_str(&self.src[start..end]).expect("validated digits");
        self.pos = end;
        Ok((value, start))
    }

    fn tail_term(&mut self) -> Result<Term, ParseError> {
        let (value, at) = self.integer()?;
        if !value.is_positive() {
            return Err(self.error(
                ParseErrorKind::Invariant,
                at,
                format!("term {value} must be at least 1 (only the first term may be zero or negative)"),
            ));
        }
        Ok((value, at))
    }

    /// `"(" terms ")"`, the opening parenthesis already consumed.
    fn period(&mut self, open_at: usize) -> Result<Vec<BigInt>, ParseError> {
        if self.peek() == Some(')') {
            return Err(self.error(ParseErrorKind::Invariant, open_at, "empty period"));
        }
        let mut terms = vec![self.tail_term()?.0];
        loop {
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    terms.push(self.tail_term()?.0);
                }
                Some(')') => {
                    self.pos += 1;
                    return Ok(terms);
                }
                Some(c) => return Err(self.syntax(format!("expected ',' or ')', found '{c}'"))),
                None => return Err(self.syntax("unclosed period, expected ')'")),
            }
        }
    }

    fn parse(mut self) -> Result<ContinuedFraction, ParseError> {
        self.expect('[')?;
        let mut pre: Vec<BigInt> = Vec::new();
        let mut period: Option<Vec<BigInt>> = None;
        if self.peek() == Some('(') {
            let open_at = self.pos;
            self.pos += 1;
            period = Some(self.period(open_at)?);
        } else {
            pre.push(self.integer()?.0);
            if matches!(self.peek(), Some(';' | ',')) {
                self.pos += 1;
                loop {
                    if self.peek() == Some('(') {
                        let open_at = self.pos;
                        self.pos += 1;
                        period = Some(self.period(open_at)?);
                        break;
                    }
                    pre.push(self.tail_term()?.0);
                    if self.peek() == Some(',') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
            }
        }
        self.expect(']')?;
        if let Some(c) = self.peek() {
            return Err(self.syntax(format!("unexpected '{c}' after ']'")));
        }
        match period {
            None => Ok(ContinuedFraction::Finite(
                FiniteCF::new(pre).expect("terms validated while parsing"),
            )),
            Some(period) => Ok(ContinuedFraction::Periodic(
                PeriodicCF::new(pre, period).expect("terms validated while parsing"),
            )),
        }
    }
}
