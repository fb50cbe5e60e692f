//! Tokenizer and recursive-descent parser for polynomial expressions.
//!
//! Expressions use `+ - * ^`, parentheses, integers, rational literals
//! `p/q` and identifiers. Multiplication must be written out; `2x` is a
//! syntax error. Whitespace (including newlines) is insignificant and `#`
//! starts a comment running to the end of the line.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, Rational, VariableRing};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Eq,
    Arrow,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Eof => "end of input".into(),
            t => format!("`{}`", t.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Eq => "=",
            Tok::Arrow => "->",
            _ => "?",
        }
    }
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        let tok = match c {
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'{' => Tok::LBrace,
            b'}' => Tok::RBrace,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b',' => Tok::Comma,
            b'=' => Tok::Eq,
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(Error::Syntax { offset: i, message: format!("unexpected character `{ch}`") });
            }
        };
        i += 1;
        out.push((tok, start));
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

/// Cursor over a token vector; shared by the polynomial and declaration
/// parsers.
pub(crate) struct Cursor {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(text: &str) -> Result<Self> {
        Ok(Cursor { toks: tokenize(text)?, pos: 0 })
    }

    pub(crate) fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    pub(crate) fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset: self.offset(), message: message.into() })
    }

    pub(crate) fn unexpected<T>(&self, wanted: &str) -> Result<T> {
        self.error(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    pub(crate) fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&format!("`{}`", tok.symbol()))
        }
    }

    pub(crate) fn ident(&mut self) -> Result<(String, usize)> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok((s, at))
            }
            _ => self.unexpected("an identifier"),
        }
    }

    pub(crate) fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    pub(crate) fn polynomial(&mut self, ring: &VariableRing) -> Result<Polynomial> {
        PolyParser { cur: self, ring }.expr()
    }
}

struct PolyParser<'a> {
    cur: &'a mut Cursor,
    ring: &'a VariableRing,
}

impl PolyParser<'_> {
    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.cur.peek() {
                Tok::Plus => {
                    self.cur.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.cur.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while *self.cur.peek() == Tok::Star {
            self.cur.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.cur.peek() {
            Tok::Minus => {
                self.cur.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.cur.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if *self.cur.peek() != Tok::Caret {
            return Ok(base);
        }
        self.cur.bump();
        match self.cur.peek().clone() {
            Tok::Int(n) => {
                let e: u32 = match u32::try_from(&n) {
                    Ok(e) => e,
                    Err(_) => return self.cur.error("exponent too large"),
                };
                self.cur.bump();
                Ok(base.pow(e))
            }
            Tok::Minus => self.cur.error("negative exponents are not allowed"),
            _ => self.cur.unexpected("a nonnegative integer exponent"),
        }
    }

    fn primary(&mut self) -> Result<Polynomial> {
        match self.cur.peek().clone() {
            Tok::Int(n) => {
                self.cur.bump();
                if *self.cur.peek() == Tok::Slash {
                    self.cur.bump();
                    let d = match self.cur.peek().clone() {
                        Tok::Int(d) => d,
                        _ => return self.cur.unexpected("an integer denominator"),
                    };
                    if d.is_zero() {
                        return self.cur.error("zero denominator");
                    }
                    self.cur.bump();
                    Ok(Polynomial::constant(self.ring, Rational::new(n, d)))
                } else {
                    Ok(Polynomial::constant(self.ring, Rational::from_integer(n)))
                }
            }
            Tok::Ident(name) => {
                let i = self.ring.var_index(&name)?;
                self.cur.bump();
                Ok(Polynomial::var(self.ring, i))
            }
            Tok::LParen => {
                self.cur.bump();
                let inner = self.expr()?;
                self.cur.expect(Tok::RParen)?;
                Ok(inner)
            }
            _ => self.cur.unexpected("a number, variable or `(`"),
        }
    }
}

/// Parses a complete polynomial expression over `ring`.
pub fn parse_polynomial(text: &str, ring: &VariableRing) -> Result<Polynomial> {
    let mut cur = Cursor::new(text)?;
    let p = cur.polynomial(ring)?;
    if !cur.at_eof() {
        return cur.unexpected("an operator or end of input");
    }
    Ok(p)
}
