//! Recursive-descent parser for the polynomial grammar.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' INT)?
//! atom   := INT ['/' INT] | IDENT | '(' expr ')'
//! ```
//!
//! Implicit multiplication is rejected. In complex charts the identifier `I`
//! denotes the imaginary unit.

use num_bigint::BigInt;
use num_traits::Zero;

use super::context::Ctx;
use super::field::{Field, Rational};
use super::polynomial::Polynomial;
use crate::error::{IndexError, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

fn location(text: &str, pos: usize) -> (usize, usize) {
    let mut line = 1;
    let mut col = 1;
    for c in text.chars().take(pos) {
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

fn syntax(text: &str, pos: usize, msg: impl Into<String>) -> IndexError {
    let (line, col) = location(text, pos);
    IndexError::Syntax { line, col, msg: msg.into() }
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// Returns the token and its starting offset.
    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let start = self.pos;
        let Some(&c) = self.chars.get(self.pos) else {
            return Ok((Tok::End, start));
        };
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let num = self.digits();
                let save = self.pos;
                self.skip_ws();
                if self.chars.get(self.pos) == Some(&'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(IndexError::BadRational(format!("{num}/")));
                    }
                    let d: BigInt = den.parse().expect("digits");
                    if d.is_zero() {
                        return Err(IndexError::BadRational(format!("{num}/{den}")));
                    }
                    let n: BigInt = num.parse().expect("digits");
                    return Ok((Tok::Num(Rational::new(n, d)), start));
                }
                self.pos = save;
                let n: BigInt = num.parse().expect("digits");
                return Ok((Tok::Num(Rational::from_integer(n)), start));
            }
            c if c.is_ascii_alphabetic() => {
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                return Ok((Tok::Ident(self.chars[start..self.pos].iter().collect()), start));
            }
            '/' => return Err(syntax(self.text, start, "'/' is only allowed inside a rational literal a/b")),
            other => return Err(syntax(self.text, start, format!("unexpected character '{other}'"))),
        };
        self.pos += 1;
        Ok((tok, start))
    }
}

struct Parser<'a, C: Field> {
    ctx: &'a Ctx,
    toks: Vec<(Tok, usize)>,
    i: usize,
    text: &'a str,
    _c: std::marker::PhantomData<C>,
}

impl<'a, C: Field> Parser<'a, C> {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> usize {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial<C>> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<C>> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        match self.peek() {
            Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                Err(syntax(self.text, self.pos(), "implicit multiplication is not allowed; write '*'"))
            }
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<Polynomial<C>> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Tok::Num(q) if q.is_integer() => {
                    let e: u32 = q
                        .to_integer()
                        .try_into()
                        .map_err(|_| syntax(self.text, pos, "exponent out of range"))?;
                    Ok(base.pow(e))
                }
                _ => Err(syntax(self.text, pos, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<C>> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(q) => Ok(Polynomial::constant(self.ctx, C::from_rational(q))),
            Tok::Ident(name) => match self.ctx.index_of(&name) {
                Some(i) => Ok(Polynomial::var_at(self.ctx, i)),
                None if name == "I" => match C::imaginary_unit() {
                    Some(i) => Ok(Polynomial::constant(self.ctx, i)),
                    None => Err(IndexError::UnknownVariable(name)),
                },
                None => Err(IndexError::UnknownVariable(name)),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    _ => Err(syntax(self.text, close, "expected ')'")),
                }
            }
            Tok::End => Err(syntax(self.text, pos, "unexpected end of input")),
            t => Err(syntax(self.text, pos, format!("unexpected token {t:?}"))),
        }
    }
}

/// Parses a polynomial over `ctx`.
pub fn parse<C: Field>(ctx: &Ctx, text: &str) -> Result<Polynomial<C>> {
    let mut lexer = Lexer { chars: text.chars().collect(), pos: 0, text };
    let mut toks = Vec::new();
    loop {
        let (t, p) = lexer.next()?;
        let end = t == Tok::End;
        toks.push((t, p));
        if end {
            break;
        }
    }
    let mut parser = Parser { ctx, toks, i: 0, text, _c: std::marker::PhantomData };
    let p = parser.expr()?;
    match parser.peek() {
        Tok::End => Ok(p),
        Tok::RParen => Err(syntax(text, parser.pos(), "unbalanced ')'")),
        _ => Err(syntax(text, parser.pos(), "trailing input")),
    }
}
