//! Parser for the bundle-expression language.
//!
//! ```text
//! sum    := term ("+" term)*
//! term   := atom ("*" atom)*
//! atom   := "U" | "Q" | "O(" int ")" | "(" sum ")"
//!         | "dual(" sum ")" | "end0(" sum ")"
//!         | "wedge(" nat "," sum ")" | "sym(" nat "," sum ")"
//!         | "schur([" nat ("," nat)* "]," sum ")"
//! ```
//!
//! Whitespace is ignored between tokens. Both binary operators associate to
//! the left, so printing an expression and parsing it back is the identity.

use std::fmt;

use bundlecalc_core::{BundleExpr, Partition};

/// What went wrong, with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// The input at `offset` is not one of the expected tokens.
    Unexpected { found: String, expected: Vec<String> },
    /// A number does not fit or has the wrong sign.
    BadNumber(String),
    /// The parts of a Schur index are not weakly decreasing.
    MalformedPartition(Vec<u32>),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Unexpected { found, expected } => {
                write!(f, "at byte {}: found {found}, expected one of: {}", self.offset, expected.join(" "))
            }
            ParseErrorKind::BadNumber(msg) => write!(f, "at byte {}: {msg}", self.offset),
            ParseErrorKind::MalformedPartition(parts) => {
                write!(f, "at byte {}: partition {parts:?} is not weakly decreasing", self.offset)
            }
        }
    }
}

impl std::error::Error for ParseError {}

const ATOM_START: &[&str] = &["U", "Q", "O(", "dual(", "wedge(", "sym(", "schur(", "end0(", "("];

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn found(&self) -> String {
        match self.src[self.pos..].chars().next() {
            None => "end of input".to_string(),
            Some(c) => format!("{c:?}"),
        }
    }

    fn unexpected<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.pos,
            kind: ParseErrorKind::Unexpected {
                found: self.found(),
                expected: expected.iter().map(|s| format!("{s:?}")).collect(),
            },
        })
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.unexpected(&[tok])
        }
    }

    /// An identifier made of ASCII letters and digits.
    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.bytes().take_while(|b| b.is_ascii_alphanumeric()).count();
        if len == 0 || !rest.as_bytes()[0].is_ascii_alphabetic() {
            return None;
        }
        self.pos += len;
        Some(&rest[..len])
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let sign = usize::from(rest.starts_with('-') || rest.starts_with('+'));
        let digits = rest[sign..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.unexpected(&["integer"]);
        }
        self.pos += sign + digits;
        self.src[start..self.pos].parse().map_err(|_| ParseError {
            offset: start,
            kind: ParseErrorKind::BadNumber(format!("{} does not fit in 64 bits", &self.src[start..self.pos])),
        })
    }

    fn nat(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.unexpected(&["non-negative integer"]);
        }
        self.pos += digits;
        rest[..digits].parse().map_err(|_| ParseError {
            offset: start,
            kind: ParseErrorKind::BadNumber(format!("{} does not fit in 32 bits", &rest[..digits])),
        })
    }

    fn sum(&mut self) -> Result<BundleExpr, ParseError> {
        let mut acc = self.term()?;
        while self.eat("+") {
            acc = BundleExpr::sum(acc, self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BundleExpr, ParseError> {
        let mut acc = self.atom()?;
        while self.eat("*") {
            acc = BundleExpr::tensor(acc, self.atom()?);
        }
        Ok(acc)
    }

    fn wrapped(&mut self) -> Result<BundleExpr, ParseError> {
        self.expect("(")?;
        let e = self.sum()?;
        self.expect(")")?;
        Ok(e)
    }

    fn atom(&mut self) -> Result<BundleExpr, ParseError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with('(') {
            return self.wrapped();
        }
        let start = self.pos;
        let Some(name) = self.ident() else {
            return self.unexpected(ATOM_START);
        };
        match name {
            "U" => Ok(BundleExpr::U),
            "Q" => Ok(BundleExpr::Q),
            "O" => {
                self.expect("(")?;
                let t = self.int()?;
                self.expect(")")?;
                Ok(BundleExpr::Line(t))
            }
            "dual" => Ok(BundleExpr::dual(self.wrapped()?)),
            "end0" => Ok(BundleExpr::end0(self.wrapped()?)),
            "wedge" | "sym" => {
                self.expect("(")?;
                let p = self.nat()?;
                self.expect(",")?;
                let e = self.sum()?;
                self.expect(")")?;
                Ok(if name == "wedge" { BundleExpr::wedge(p, e) } else { BundleExpr::sym(p, e) })
            }
            "schur" => {
                self.expect("(")?;
                let lam = self.partition()?;
                self.expect(",")?;
                let e = self.sum()?;
                self.expect(")")?;
                Ok(BundleExpr::schur(lam, e))
            }
            _ => {
                self.pos = start;
                self.unexpected(ATOM_START)
            }
        }
    }

    fn partition(&mut self) -> Result<Partition, ParseError> {
        self.expect("[")?;
        let start = self.pos;
        let mut parts = Vec::new();
        if !self.eat("]") {
            loop {
                parts.push(self.nat()?);
                if self.eat("]") {
                    break;
                }
                if !self.eat(",") {
                    return self.unexpected(&[",", "]"]);
                }
            }
        }
        Partition::new(parts.clone())
            .map_err(|_| ParseError { offset: start, kind: ParseErrorKind::MalformedPartition(parts) })
    }
}

/// Parses a complete bundle expression.
pub fn parse(src: &str) -> Result<BundleExpr, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos != src.len() {
        return p.unexpected(&["+", "*", "end of input"]);
    }
    Ok(e)
}
