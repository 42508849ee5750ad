use thiserror::Error;

use super::{Formula, Term};
use crate::hf::HfSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unbound variable {name}")]
    UnboundVariable { name: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(String),
    Class(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Dot,
    Eq,
    Tilde,
    Amp,
    Bar,
    Arrow,
    Iff,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Var(v) | Tok::Class(v) => format!("'{v}'"),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBrack => "'['".into(),
            Tok::RBrack => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Dot => "'.'".into(),
            Tok::Eq => "'='".into(),
            Tok::Tilde => "'~'".into(),
            Tok::Amp => "'&'".into(),
            Tok::Bar => "'|'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::Iff => "'<->'".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let simple = match c {
            b'{' => Some(Tok::LBrace),
            b'}' => Some(Tok::RBrace),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'[' => Some(Tok::LBrack),
            b']' => Some(Tok::RBrack),
            b',' => Some(Tok::Comma),
            b'.' => Some(Tok::Dot),
            b'=' => Some(Tok::Eq),
            b'~' => Some(Tok::Tilde),
            b'&' => Some(Tok::Amp),
            b'|' => Some(Tok::Bar),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((start, t));
            i += 1;
        } else if src[i..].starts_with("->") {
            out.push((start, Tok::Arrow));
            i += 2;
        } else if src[i..].starts_with("<->") {
            out.push((start, Tok::Iff));
            i += 3;
        } else if c.is_ascii_alphabetic() {
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_' || b[i] == b'\'') {
                i += 1;
            }
            let word = src[start..i].to_string();
            out.push((start, if c.is_ascii_uppercase() { Tok::Class(word) } else { Tok::Var(word) }));
        } else {
            let ch = src[i..].chars().next().unwrap_or('?');
            return Err(ParseError::Syntax { pos: i, msg: format!("unexpected character '{ch}'") });
        }
    }
    Ok(out)
}

const KEYWORDS: [&str; 6] = ["false", "in", "all", "ex", "bigand", "bigor"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.at + k).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let found = self.peek().map(Tok::describe).unwrap_or_else(|| "end of input".into());
        Err(ParseError::Syntax { pos: self.pos(), msg: format!("{}, found {found}", msg.into()) })
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Var(w)) if w == kw)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            self.err(format!("expected {}", t.describe()))
        }
    }

    fn var(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Var(w)) if !KEYWORDS.contains(&w.as_str()) => {
                let w = w.clone();
                self.at += 1;
                Ok(w)
            }
            _ => self.err("expected a variable"),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.implication()?;
        if self.eat(&Tok::Iff) {
            let rhs = self.implication()?;
            return Ok(Formula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conjunction()?;
        while self.eat(&Tok::Bar) {
            acc = Formula::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::Amp) {
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.eat(&Tok::Tilde) {
            return Ok(Formula::not(self.unary()?));
        }
        if self.is_kw("all") || self.is_kw("ex") {
            let universal = self.is_kw("all");
            self.at += 1;
            if let Some(Tok::Class(c)) = self.peek() {
                let c = c.clone();
                self.at += 1;
                self.expect(Tok::Dot)?;
                let body = Box::new(self.formula()?);
                return Ok(if universal { Formula::ClassAll(c, body) } else { Formula::ClassEx(c, body) });
            }
            let x = self.var()?;
            let bound = if self.is_kw("in") {
                self.at += 1;
                Some(self.term()?)
            } else {
                None
            };
            self.expect(Tok::Dot)?;
            let body = Box::new(self.formula()?);
            return Ok(match (bound, universal) {
                (Some(t), true) => Formula::BoundedAll(x, t, body),
                (Some(t), false) => Formula::BoundedEx(x, t, body),
                (None, true) => Formula::All(x, body),
                (None, false) => Formula::Ex(x, body),
            });
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        if self.is_kw("false") {
            self.at += 1;
            return Ok(Formula::Falsum);
        }
        if self.is_kw("bigand") || self.is_kw("bigor") {
            let conj = self.is_kw("bigand");
            self.at += 1;
            self.expect(Tok::LBrack)?;
            let mut items = vec![self.formula()?];
            while self.eat(&Tok::Comma) {
                items.push(self.formula()?);
            }
            self.expect(Tok::RBrack)?;
            return Ok(if conj { Formula::BigAnd(items) } else { Formula::BigOr(items) });
        }
        if self.eat(&Tok::LParen) {
            let f = self.formula()?;
            self.expect(Tok::RParen)?;
            return Ok(f);
        }
        if let Some(Tok::Class(a)) = self.peek() {
            let a = a.clone();
            self.at += 1;
            self.expect(Tok::Eq)?;
            return match self.peek() {
                Some(Tok::Class(b)) => {
                    let b = b.clone();
                    self.at += 1;
                    Ok(Formula::ClassEq(a, b))
                }
                _ => self.err("expected a class identifier"),
            };
        }
        if let (Some(Tok::Var(w)), next) = (self.peek(), self.peek_at(1)) {
            let is_atom_lhs = matches!(next, Some(Tok::Eq)) || matches!(next, Some(Tok::Var(k)) if k == "in");
            if !KEYWORDS.contains(&w.as_str()) && !is_atom_lhs {
                let w = w.clone();
                self.at += 1;
                return Ok(Formula::Prop(w));
            }
        }
        let lhs = self.term()?;
        if self.eat(&Tok::Eq) {
            return Ok(Formula::Eq(lhs, self.term()?));
        }
        if self.is_kw("in") {
            self.at += 1;
            if let Some(Tok::Class(c)) = self.peek() {
                let c = c.clone();
                self.at += 1;
                return Ok(Formula::ClassMem(lhs, c));
            }
            return Ok(Formula::Mem(lhs, self.term()?));
        }
        self.err("expected '=' or 'in'")
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        if self.peek() == Some(&Tok::LBrace) {
            return Ok(Term::Lit(self.literal()?));
        }
        Ok(Term::Var(self.var()?))
    }

    fn literal(&mut self) -> Result<HfSet, ParseError> {
        self.expect(Tok::LBrace)?;
        let mut elems = Vec::new();
        if self.eat(&Tok::RBrace) {
            return Ok(HfSet::empty());
        }
        loop {
            elems.push(self.literal()?);
            if self.eat(&Tok::RBrace) {
                return Ok(HfSet::from_elements(elems));
            }
            self.expect(Tok::Comma)?;
        }
    }
}

/// Parses formula source text.
///
/// A bare lowercase identifier that is not followed by `=` or `in` is a
/// propositional atom.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let f = p.formula()?;
    if p.at < p.toks.len() {
        return p.err("expected end of input");
    }
    Ok(f)
}

/// Parses and rejects free variables outside `allowed`.
pub fn parse_closed(text: &str, allowed: &[&str]) -> Result<Formula, ParseError> {
    let f = parse(text)?;
    if let Some(name) = f.free_vars().into_iter().find(|v| !allowed.contains(&v.as_str())) {
        return Err(ParseError::UnboundVariable { name });
    }
    Ok(f)
}
