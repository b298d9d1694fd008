//! Linear expressions over divisor-class symbols with exact rational coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `constant + sum coeff * symbol`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearForm {
    pub constant: BigRational,
    pub coeffs: BTreeMap<String, BigRational>,
}

impl LinearForm {
    pub fn constant(c: BigRational) -> Self {
        LinearForm { constant: c, coeffs: BTreeMap::new() }
    }

    pub fn symbol(name: &str) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(name.to_string(), BigRational::one());
        LinearForm { constant: BigRational::zero(), coeffs }
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.constant.is_zero()
    }

    pub fn coeff(&self, name: &str) -> BigRational {
        self.coeffs.get(name).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.constant += &other.constant;
        for (k, v) in &other.coeffs {
            let e = out.coeffs.entry(k.clone()).or_insert_with(BigRational::zero);
            *e += v;
            if e.is_zero() {
                out.coeffs.remove(k);
            }
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return LinearForm::default();
        }
        LinearForm {
            constant: &self.constant * k,
            coeffs: self.coeffs.iter().map(|(s, c)| (s.clone(), c * k)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }
}

pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(BigRational, Option<&str>)> =
            self.coeffs.iter().map(|(s, c)| (c.clone(), Some(s.as_str()))).collect();
        if !self.constant.is_zero() || parts.is_empty() {
            parts.push((self.constant.clone(), None));
        }
        for (i, (c, s)) in parts.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            match s {
                Some(s) if a.is_one() => write!(f, "{s}")?,
                Some(s) => write!(f, "{}*{s}", format_rational(&a))?,
                None => write!(f, "{}", format_rational(&a))?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Num(s.parse().unwrap())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|&(_, c)| c).collect())));
        } else if "+-*/()".contains(c) || c == '\u{2212}' {
            out.push((pos, Tok::Op(if c == '\u{2212}' { '-' } else { c })));
            i += 1;
        } else {
            return Err(Error::Parse { pos, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

/// Resolves identifiers: declared symbols stay symbolic, named constants become numbers.
pub struct Scope<'a> {
    pub symbols: &'a BTreeSet<String>,
    pub constants: &'a BTreeMap<String, BigRational>,
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    scope: &'a Scope<'a>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<LinearForm> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.at += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LinearForm> {
        let mut acc = self.factor()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.at += 1;
            let rhs = self.factor()?;
            acc = if c == '*' {
                match (acc.is_constant(), rhs.is_constant()) {
                    (true, _) => rhs.scale(&acc.constant),
                    (_, true) => acc.scale(&rhs.constant),
                    _ => return self.err("product of two classes is not linear"),
                }
            } else {
                if !rhs.is_constant() || rhs.constant.is_zero() {
                    return self.err("division by a class or by zero");
                }
                acc.scale(&rhs.constant.recip())
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LinearForm> {
        match self.peek().cloned() {
            Some(Tok::Op('-')) => {
                self.at += 1;
                Ok(self.factor()?.scale(&-BigRational::one()))
            }
            Some(Tok::Op('+')) => {
                self.at += 1;
                self.factor()
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return self.err("expected ')'");
                }
                self.at += 1;
                Ok(e)
            }
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(LinearForm::constant(BigRational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if let Some(c) = self.scope.constants.get(&name) {
                    Ok(LinearForm::constant(c.clone()))
                } else if self.scope.symbols.contains(&name) {
                    Ok(LinearForm::symbol(&name))
                } else {
                    Err(Error::UndeclaredSymbol(name))
                }
            }
            _ => self.err("expected a number, symbol or '('"),
        }
    }
}

pub fn parse_linear(text: &str, scope: &Scope) -> Result<LinearForm> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, at: 0, end: text.len(), scope };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn half_integer_coefficients() {
        let symbols: BTreeSet<String> = ["F", "muM"].iter().map(|s| s.to_string()).collect();
        let mut constants = BTreeMap::new();
        constants.insert("N".to_string(), q(7, 1));
        constants.insert("dimA".to_string(), q(4, 1));
        let scope = Scope { symbols: &symbols, constants: &constants };
        let f = parse_linear("(N+dimA-2)*muM - (N+dimA-2)/2*F", &scope).unwrap();
        assert_eq!(f.coeff("muM"), q(9, 1));
        assert_eq!(f.coeff("F"), q(-9, 2));
        assert_eq!(f.to_string(), "-9/2*F + 9*muM");
        assert!(matches!(parse_linear("G + F", &scope), Err(Error::UndeclaredSymbol(_))));
        assert!(parse_linear("F*muM", &scope).is_err());
        assert!(parse_linear("F/0", &scope).is_err());
        assert!(parse_linear("(F", &scope).is_err());
    }
}
