//! Text form of branching vectors.
//!
//! One rule per line: `name: (e1, e2, ...)`, optionally followed by
//! `= 1.7314` as a reference number. Entries are arithmetic expressions over
//! `w1`, `w2` (also `w`, `ω`, `ω1`, `ω2`), the family parameter `k`, numbers,
//! `+ - * /`, parentheses and `min(a, b)` / `max(a, b)`. An entry of the exact
//! form `k*(e)` or `3*(e)` stands for that many copies of `e`. `#` starts a
//! comment.

use std::fmt;

use serde::Serialize;

use crate::branch::WeightSet;
use crate::error::{ParseError, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    W1,
    W2,
    K,
    Neg(Box<Expr>),
    Bin(char, Box<Expr>, Box<Expr>),
    Min(Box<Expr>, Box<Expr>),
    Max(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn eval(&self, w: WeightSet, k: f64) -> f64 {
        match self {
            Expr::Num(x) => *x,
            Expr::W1 => w.w1,
            Expr::W2 => w.w2,
            Expr::K => k,
            Expr::Neg(a) => -a.eval(w, k),
            Expr::Bin(op, a, b) => {
                let (a, b) = (a.eval(w, k), b.eval(w, k));
                match op {
                    '+' => a + b,
                    '-' => a - b,
                    '*' => a * b,
                    _ => a / b,
                }
            }
            Expr::Min(a, b) => a.eval(w, k).min(b.eval(w, k)),
            Expr::Max(a, b) => a.eval(w, k).max(b.eval(w, k)),
        }
    }

    fn uses_k(&self) -> bool {
        match self {
            Expr::K => true,
            Expr::Num(_) | Expr::W1 | Expr::W2 => false,
            Expr::Neg(a) => a.uses_k(),
            Expr::Bin(_, a, b) | Expr::Min(a, b) | Expr::Max(a, b) => a.uses_k() || b.uses_k(),
        }
    }
}

/// How often an entry repeats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Repeat {
    Times(usize),
    K,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub repeat: Repeat,
    pub expr: Expr,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BranchingVector {
    pub entries: Vec<Entry>,
}

impl BranchingVector {
    /// Whether the vector is a family indexed by `k`.
    pub fn is_family(&self) -> bool {
        self.entries.iter().any(|e| e.repeat == Repeat::K || e.expr.uses_k())
    }

    /// Drops at the given weights for family member `k`.
    pub fn evaluate(&self, w: WeightSet, k: usize) -> Vec<f64> {
        let mut out = Vec::new();
        for e in &self.entries {
            let times = match e.repeat {
                Repeat::Times(t) => t,
                Repeat::K => k,
            };
            let x = e.expr.eval(w, k as f64);
            out.extend(std::iter::repeat_n(x, times));
        }
        out
    }
}

impl fmt::Display for BranchingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.entries.iter().map(|e| e.text.as_str()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NamedVector {
    pub name: String,
    pub vector: BranchingVector,
    /// Reference branching number given after `=`.
    pub reference: Option<f64>,
}

struct Lexer<'a> {
    s: &'a [u8],
    src: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::new(self.line, msg))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected {c:?} at column {}", self.pos + 1))
        }
    }

    fn number(&mut self) -> Result<f64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_digit() || self.s[self.pos] == b'.') {
            self.pos += 1;
        }
        let t = &self.src[start..self.pos];
        t.parse().or_else(|_| self.err(format!("bad number {t:?}")))
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_alphanumeric() || c == '_' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        self.src[start..self.pos].to_string()
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut a = self.term()?;
        loop {
            if self.eat('+') {
                a = Expr::Bin('+', Box::new(a), Box::new(self.term()?));
            } else if self.eat('-') {
                a = Expr::Bin('-', Box::new(a), Box::new(self.term()?));
            } else {
                return Ok(a);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut a = self.factor()?;
        loop {
            if self.eat('*') {
                a = Expr::Bin('*', Box::new(a), Box::new(self.factor()?));
            } else if self.eat('/') {
                a = Expr::Bin('/', Box::new(a), Box::new(self.factor()?));
            } else {
                return Ok(a);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => Ok(Expr::Num(self.number()?)),
            Some(c) if c.is_alphabetic() => {
                let id = self.ident();
                match id.as_str() {
                    "w1" | "ω1" => Ok(Expr::W1),
                    "w2" | "ω2" | "w" | "ω" | "omega" => Ok(Expr::W2),
                    "k" => Ok(Expr::K),
                    "min" | "max" => {
                        self.expect('(')?;
                        let a = self.expr()?;
                        self.expect(',')?;
                        let b = self.expr()?;
                        self.expect(')')?;
                        let (a, b) = (Box::new(a), Box::new(b));
                        Ok(if id == "min" { Expr::Min(a, b) } else { Expr::Max(a, b) })
                    }
                    _ => self.err(format!("unknown name {id:?}")),
                }
            }
            Some(c) => self.err(format!("unexpected {c:?}")),
            None => self.err("unexpected end of line"),
        }
    }

    /// One vector entry, recognizing the `count*(e)` repetition form.
    fn entry(&mut self) -> Result<Entry, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let expr = self.expr()?;
        let text = self.src[start..self.pos].trim().to_string();
        let repeat = match &expr {
            Expr::Bin('*', a, b) if text.ends_with(')') && is_paren_tail(&text) => match **a {
                Expr::K => Some((Repeat::K, (**b).clone())),
                Expr::Num(x) if x >= 1.0 && x.fract() == 0.0 => Some((Repeat::Times(x as usize), (**b).clone())),
                _ => None,
            },
            _ => None,
        };
        Ok(match repeat {
            Some((repeat, expr)) => Entry { repeat, expr, text },
            None => Entry { repeat: Repeat::Times(1), expr, text },
        })
    }
}

/// `text` is `head*(...)` with the parenthesized group closing at the end.
fn is_paren_tail(text: &str) -> bool {
    let Some(star) = text.find('*') else { return false };
    let (head, tail) = (text[..star].trim(), text[star + 1..].trim());
    if head.is_empty() || !head.chars().all(|c| c.is_ascii_digit() || c == 'k') || !tail.starts_with('(') {
        return false;
    }
    let mut depth = 0i32;
    for (i, c) in tail.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return i == tail.len() - 1;
                }
            }
            _ => {}
        }
    }
    false
}

/// Parses a single vector such as `(1, 1+w2)`.
pub fn parse_vector(text: &str) -> Result<BranchingVector, ParseError> {
    parse_vector_at(text, 1)
}

fn parse_vector_at(text: &str, line: usize) -> Result<BranchingVector, ParseError> {
    let mut lx = Lexer { s: text.as_bytes(), src: text, pos: 0, line };
    lx.expect('(')?;
    let mut entries = vec![lx.entry()?];
    while lx.eat(',') {
        entries.push(lx.entry()?);
    }
    lx.expect(')')?;
    if lx.peek().is_some() {
        return lx.err("trailing input after the vector");
    }
    Ok(BranchingVector { entries })
}

/// Parses a rule list, one `name: (…)` per line.
pub fn parse_rules(text: &str) -> Result<Vec<NamedVector>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let (name, rest) = body.split_once(':').ok_or_else(|| ParseError::new(line, "expected `name: (entries)`"))?;
        let (vec_text, reference) = match rest.rsplit_once('=') {
            Some((v, r)) => {
                let r: f64 = r
                    .trim()
                    .parse()
                    .map_err(|_| ParseError::new(line, format!("bad reference number {:?}", r.trim())))?;
                (v, Some(r))
            }
            None => (rest, None),
        };
        let vector = parse_vector_at(vec_text.trim(), line)?;
        out.push(NamedVector { name: name.trim().to_string(), vector, reference });
    }
    Ok(out)
}
