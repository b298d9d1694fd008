use std::sync::Arc;

use num_bigint::BigInt;

use super::poly::Polynomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push((pos, Tok::Plus));
            }
            // ASCII hyphen and U+2212 MINUS SIGN both subtract.
            '-' | '\u{2212}' => {
                chars.next();
                out.push((pos, Tok::Minus));
            }
            '*' => {
                chars.next();
                out.push((pos, Tok::Star));
            }
            '^' => {
                chars.next();
                out.push((pos, Tok::Caret));
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((pos, Tok::Int(s.parse().expect("digits"))));
            }
            'a'..='z' => {
                let mut s = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_lowercase() || d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((pos, Tok::Var(s)));
            }
            _ => {
                return Err(Error::Parse { pos, msg: format!("unexpected character {c:?}") });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: &'a Arc<Vec<String>>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.to_string() })
    }

    fn small_int(&mut self) -> Result<u32> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                u32::try_from(&n).or_else(|_| self.err("exponent too large"))
            }
            _ => self.err("expected an integer exponent"),
        }
    }

    fn factor(&mut self, mono: &mut [u32]) -> Result<()> {
        match self.peek().cloned() {
            Some(Tok::Var(name)) => {
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or(Error::UnknownVariable(name))?;
                self.at += 1;
                let mut e = 1;
                if self.peek() == Some(&Tok::Caret) {
                    self.at += 1;
                    e = self.small_int()?;
                }
                mono[idx] += e;
                Ok(())
            }
            _ => self.err("expected a variable"),
        }
    }

    // term ::= int | [int][*] var(^int)? (* var(^int)?)*
    fn term(&mut self) -> Result<(Vec<u32>, BigInt)> {
        let mut mono = vec![0; self.vars.len()];
        let mut coeff = BigInt::from(1);
        if let Some(Tok::Int(n)) = self.peek().cloned() {
            self.at += 1;
            coeff = n;
            match self.peek() {
                Some(Tok::Star) => self.at += 1,
                Some(Tok::Var(_)) => {}
                _ => return Ok((mono, coeff)),
            }
        }
        self.factor(&mut mono)?;
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            self.factor(&mut mono)?;
        }
        Ok((mono, coeff))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut f = Polynomial::zero(self.vars);
        let mut sign = 1;
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            sign = -1;
        } else if self.peek() == Some(&Tok::Plus) {
            self.at += 1;
        }
        loop {
            let (m, c) = self.term()?;
            f.add_term(m, c * sign);
            match self.peek() {
                None => return Ok(f),
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                Some(_) => return self.err("expected + or -"),
            }
            self.at += 1;
        }
    }
}

/// Parses the grammar
/// `expr ::= term ((+|-) term)*`, `term ::= [int][*]? var(^int)? (* var(^int)?)*`
/// (a bare integer is also a term).
pub fn parse_poly(text: &str, vars: &Arc<Vec<String>>) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, at: 0, end: text.len(), vars };
    p.expr()
}
