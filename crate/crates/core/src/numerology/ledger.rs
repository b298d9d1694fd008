//! Plain-text identity ledger.
//!
//! ```text
//! [g4/align-ksigma]            section: case tag / name
//! # anchor: <claim id>         attached to the enclosing section
//! symbols: mKS, H, LA          declared classes, in order
//! let N = 7                    named rational constant
//! rel: LB == d*LA - Fa         relation used for rewriting
//! claim: mKS == (N+1)*H + ...  identity to verify
//! coeff: E in mK over muM, F, E == -(dimA-3)
//! ```

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;

use super::expr::{format_rational, parse_linear, LinearForm, Scope};
use super::{verify_identity, ClassLattice};
use crate::error::{Error, Result};

pub const SHIPPED_LEDGER: &str = include_str!("../../data/identities.ledger");

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Claim { lhs: LinearForm, rhs: LinearForm },
    Coeff { symbol: String, expr: LinearForm, over: Vec<String>, value: BigRational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub line: usize,
    pub text: String,
    pub kind: EntryKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerSection {
    pub case: String,
    pub name: String,
    pub anchor: String,
    pub constants: BTreeMap<String, BigRational>,
    pub lattice: ClassLattice,
    pub entries: Vec<LedgerEntry>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ledger {
    pub sections: Vec<LedgerSection>,
}

fn ledger_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Ledger(format!("line {line}: {msg}"))
}

fn split_eq(text: &str, line: usize) -> Result<(&str, &str)> {
    text.rsplit_once("==").ok_or_else(|| ledger_err(line, "expected `lhs == rhs`"))
}

pub fn parse_ledger(text: &str) -> Result<Ledger> {
    let mut ledger = Ledger::default();
    let mut symbols: BTreeSet<String> = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(rest) = t.strip_prefix('#') {
            if let (Some(anchor), Some(sec)) =
                (rest.trim().strip_prefix("anchor:"), ledger.sections.last_mut())
            {
                sec.anchor = anchor.trim().to_string();
            }
            continue;
        }
        if let Some(head) = t.strip_prefix('[').and_then(|h| h.strip_suffix(']')) {
            let (case, name) =
                head.split_once('/').ok_or_else(|| ledger_err(line, "header must be [case/name]"))?;
            symbols.clear();
            ledger.sections.push(LedgerSection {
                case: case.trim().to_string(),
                name: name.trim().to_string(),
                anchor: String::new(),
                constants: BTreeMap::new(),
                lattice: ClassLattice::default(),
                entries: Vec::new(),
            });
            continue;
        }
        let sec = ledger.sections.last_mut().ok_or_else(|| ledger_err(line, "entry before any section"))?;
        let (key, body) = match t.split_once(':') {
            Some((k, b)) if !k.starts_with("let ") => (k.trim(), b.trim()),
            _ => ("let", t.strip_prefix("let ").ok_or_else(|| ledger_err(line, "unknown entry"))?),
        };
        let scope = Scope { symbols: &symbols, constants: &sec.constants };
        let parse = |s: &str| parse_linear(s.trim(), &scope).map_err(|e| ledger_err(line, e));
        match key {
            "symbols" => {
                let names: Vec<String> = body.split(',').map(|s| s.trim().to_string()).collect();
                if names.iter().any(|s| s.is_empty()) {
                    return Err(ledger_err(line, "empty symbol name"));
                }
                symbols.extend(names.iter().cloned());
                sec.lattice.basis.extend(names);
            }
            "let" => {
                let (name, value) =
                    body.split_once('=').ok_or_else(|| ledger_err(line, "expected `let NAME = value`"))?;
                let v = parse(value)?;
                if !v.is_constant() {
                    return Err(ledger_err(line, "let value must be a constant"));
                }
                sec.constants.insert(name.trim().to_string(), v.constant);
            }
            "rel" => {
                let (a, b) = split_eq(body, line)?;
                let (a, b) = (parse(a)?, parse(b)?);
                sec.lattice
                    .add_relation(&format!("line {line}: {body}"), &a, &b)
                    .map_err(|e| ledger_err(line, e))?;
            }
            "claim" => {
                let (a, b) = split_eq(body, line)?;
                let kind = EntryKind::Claim { lhs: parse(a)?, rhs: parse(b)? };
                sec.entries.push(LedgerEntry { line, text: body.to_string(), kind });
            }
            "coeff" => {
                let (left, value) = split_eq(body, line)?;
                let (symbol, rest) =
                    left.split_once(" in ").ok_or_else(|| ledger_err(line, "expected `SYM in EXPR over ...`"))?;
                let (expr, over) =
                    rest.rsplit_once(" over ").ok_or_else(|| ledger_err(line, "missing `over`"))?;
                let value = parse(value)?;
                if !value.is_constant() {
                    return Err(ledger_err(line, "coefficient value must be a constant"));
                }
                let kind = EntryKind::Coeff {
                    symbol: symbol.trim().to_string(),
                    expr: parse(expr)?,
                    over: over.split(',').map(|s| s.trim().to_string()).collect(),
                    value: value.constant,
                };
                sec.entries.push(LedgerEntry { line, text: body.to_string(), kind });
            }
            other => return Err(ledger_err(line, format!("unknown entry kind {other:?}"))),
        }
    }
    Ok(ledger)
}

pub fn shipped_ledger() -> Ledger {
    parse_ledger(SHIPPED_LEDGER).expect("shipped ledger parses")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryOutcome {
    pub line: usize,
    pub text: String,
    pub holds: bool,
    /// Certificate for claims, observed coefficient for coefficient entries.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionOutcome {
    pub case: String,
    pub name: String,
    pub anchor: String,
    /// Symbols the relations force to zero; must be empty.
    pub degenerate: Vec<String>,
    pub entries: Vec<EntryOutcome>,
}

impl SectionOutcome {
    pub fn holds(&self) -> bool {
        self.degenerate.is_empty() && self.entries.iter().all(|e| e.holds)
    }
}

/// Verifies every section whose case tag matches `case` (all sections when `None`).
pub fn verify_ledger(ledger: &Ledger, case: Option<&str>) -> Result<Vec<SectionOutcome>> {
    ledger
        .sections
        .iter()
        .filter(|s| case.is_none_or(|c| s.case == c))
        .map(|sec| {
            let entries = sec
                .entries
                .iter()
                .map(|e| -> Result<EntryOutcome> {
                    let (holds, detail) = match &e.kind {
                        EntryKind::Claim { lhs, rhs } => {
                            let v = verify_identity(&sec.lattice, lhs, rhs)?;
                            let detail = if v.holds {
                                v.trace
                                    .iter()
                                    .map(|t| format!("{} x [{}]", format_rational(&t.coefficient), t.relation))
                                    .collect::<Vec<_>>()
                                    .join("; ")
                            } else {
                                format!("residual {}", v.residual)
                            };
                            (v.holds, detail)
                        }
                        EntryKind::Coeff { symbol, expr, over, value } => {
                            let c = sec.lattice.coefficient_in(expr, over, symbol)?;
                            (c == *value, format!("coefficient {}", format_rational(&c)))
                        }
                    };
                    Ok(EntryOutcome { line: e.line, text: e.text.clone(), holds, detail })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SectionOutcome {
                case: sec.case.clone(),
                name: sec.name.clone(),
                anchor: sec.anchor.clone(),
                degenerate: sec.lattice.degenerate_symbols(),
                entries,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_verifies_a_small_ledger() {
        let text = "\
# sample
[g4/toy]
# anchor: toy identity
symbols: a, b, c
let k = 2
rel: a == k*b
rel: c == a + b
claim: c == 3*b
coeff: b in c over b == k + 1
claim: c == a
";
        let l = parse_ledger(text).unwrap();
        assert_eq!(l.sections.len(), 1);
        assert_eq!(l.sections[0].anchor, "toy identity");
        let out = verify_ledger(&l, None).unwrap();
        let holds: Vec<bool> = out[0].entries.iter().map(|e| e.holds).collect();
        assert_eq!(holds, vec![true, true, false]);
        assert!(verify_ledger(&l, Some("g5")).unwrap().is_empty());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_ledger("[g4/x]\nsymbols: a\nclaim: a == q\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        assert!(parse_ledger("claim: a == a\n").is_err());
        assert!(parse_ledger("[g4/x]\nsymbols: a\nbogus: a\n").is_err());
    }

    #[test]
    fn shipped_ledger_verifies() {
        let out = verify_ledger(&shipped_ledger(), None).unwrap();
        assert!(!out.is_empty());
        for s in &out {
            assert!(s.holds(), "{}/{}: {:?}", s.case, s.name, s);
            assert!(!s.anchor.is_empty());
        }
    }
}
