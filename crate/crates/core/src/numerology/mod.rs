//! Exact divisor-class arithmetic: identities modulo declared linear relations.
//!
//! Class symbols are opaque. A relation `lhs == rhs` contributes the vector
//! `lhs - rhs`; a claim holds iff its difference vector lies in the span of
//! the relations, and the certificate coefficients form the trace.

mod constants;
mod expr;
mod ledger;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use constants::{
    bundle_anticanonical, case_table_check, normal_bundle_ledger, primitivity_check, BundleCheck,
    BundleSummand, CaseConstants, NormalBundleFact, PrimitivityCheck, FAMILIES,
};
pub use expr::{format_rational, parse_linear, LinearForm, Scope};
pub use ledger::{
    parse_ledger, shipped_ledger, verify_ledger, EntryKind, EntryOutcome, Ledger, LedgerEntry,
    LedgerSection, SectionOutcome, SHIPPED_LEDGER,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    /// `lhs - rhs`, with no constant term.
    pub form: LinearForm,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassLattice {
    pub basis: Vec<String>,
    pub relations: Vec<Relation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub relation: String,
    pub coefficient: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// `claim = sum coefficient * relation` when `holds`.
    pub trace: Vec<TraceStep>,
    /// What is left of the claim after eliminating relation pivots.
    pub residual: LinearForm,
}

struct Reduction {
    residual: Vec<BigRational>,
    combo: Vec<BigRational>,
    /// Pivot columns of the reduced relations, in column order.
    pivots: Vec<usize>,
}

impl ClassLattice {
    pub fn new(basis: Vec<String>) -> Self {
        ClassLattice { basis, relations: Vec::new() }
    }

    fn check_declared(&self, form: &LinearForm) -> Result<()> {
        match form.coeffs.keys().find(|s| !self.basis.contains(s)) {
            Some(s) => Err(Error::UndeclaredSymbol(s.clone())),
            None => Ok(()),
        }
    }

    pub fn add_relation(&mut self, label: &str, lhs: &LinearForm, rhs: &LinearForm) -> Result<()> {
        let form = lhs.sub(rhs);
        self.check_declared(&form)?;
        if !form.constant.is_zero() {
            return Err(Error::Ledger(format!("relation {label} has a constant term")));
        }
        self.relations.push(Relation { label: label.to_string(), form });
        Ok(())
    }

    /// Column order: symbols outside `keep` first, so they are eliminated preferentially.
    fn column_order(&self, keep: &[String]) -> Vec<String> {
        let (mut order, kept): (Vec<String>, Vec<String>) =
            self.basis.iter().cloned().partition(|s| !keep.contains(s));
        order.extend(kept);
        order
    }

    fn reduce(&self, target: &LinearForm, keep: &[String]) -> Reduction {
        let cols = self.column_order(keep);
        let nrel = self.relations.len();
        // each row: relation vector in `cols` order, then its combination of original relations
        let mut rows: Vec<(Vec<BigRational>, Vec<BigRational>)> = self
            .relations
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let v = cols.iter().map(|s| r.form.coeff(s)).collect();
                let mut c = vec![BigRational::zero(); nrel];
                c[i] = BigRational::one();
                (v, c)
            })
            .collect();
        let mut pivots = Vec::new();
        let mut pivot_rows: Vec<usize> = Vec::new();
        let mut used = vec![false; rows.len()];
        for c in 0..cols.len() {
            let Some(r) = (0..rows.len()).find(|&r| !used[r] && !rows[r].0[c].is_zero()) else {
                continue;
            };
            used[r] = true;
            let inv = rows[r].0[c].recip();
            let (v, k) = &mut rows[r];
            v.iter_mut().for_each(|x| *x *= &inv);
            k.iter_mut().for_each(|x| *x *= &inv);
            let (pv, pk) = rows[r].clone();
            for (i, (v, k)) in rows.iter_mut().enumerate() {
                if i != r && !v[c].is_zero() {
                    let f = v[c].clone();
                    v.iter_mut().zip(&pv).for_each(|(x, y)| *x -= &f * y);
                    k.iter_mut().zip(&pk).for_each(|(x, y)| *x -= &f * y);
                }
            }
            pivots.push(c);
            pivot_rows.push(r);
        }
        let mut residual: Vec<BigRational> = cols.iter().map(|s| target.coeff(s)).collect();
        let mut combo = vec![BigRational::zero(); nrel];
        for (&c, &r) in pivots.iter().zip(&pivot_rows) {
            let t = residual[c].clone();
            if t.is_zero() {
                continue;
            }
            residual.iter_mut().zip(&rows[r].0).for_each(|(x, y)| *x -= &t * y);
            combo.iter_mut().zip(&rows[r].1).for_each(|(x, y)| *x += &t * y);
        }
        // report the residual in basis order
        let residual = self
            .basis
            .iter()
            .map(|s| residual[cols.iter().position(|c| c == s).unwrap()].clone())
            .collect();
        let pivots = pivots.into_iter().map(|c| self.basis.iter().position(|s| *s == cols[c]).unwrap()).collect();
        Reduction { residual, combo, pivots }
    }

    fn to_form(&self, v: &[BigRational]) -> LinearForm {
        LinearForm {
            constant: BigRational::zero(),
            coeffs: self
                .basis
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(s, c)| (s.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether the relations force some declared symbol to vanish.
    pub fn degenerate_symbols(&self) -> Vec<String> {
        self.basis
            .iter()
            .filter(|s| {
                let red = self.reduce(&LinearForm::symbol(s), &[]);
                red.residual.iter().all(|c| c.is_zero())
            })
            .cloned()
            .collect()
    }

    /// Expresses `expr` modulo the relations in terms of `over` and returns the coefficient of `symbol`.
    pub fn coefficient_in(&self, expr: &LinearForm, over: &[String], symbol: &str) -> Result<BigRational> {
        self.check_declared(expr)?;
        for s in over.iter().chain(std::iter::once(&symbol.to_string())) {
            if !self.basis.contains(s) {
                return Err(Error::UndeclaredSymbol(s.clone()));
            }
        }
        if !over.iter().any(|s| s == symbol) {
            return Err(Error::Ledger(format!("{symbol} is not among the target symbols")));
        }
        let red = self.reduce(expr, over);
        if red.pivots.iter().any(|&c| over.contains(&self.basis[c])) {
            return Err(Error::Ledger("target symbols are dependent modulo the relations".into()));
        }
        let leftover = self.to_form(&red.residual);
        if let Some(s) = leftover.coeffs.keys().find(|s| !over.contains(s)) {
            return Err(Error::Ledger(format!("{s} cannot be eliminated")));
        }
        Ok(leftover.coeff(symbol))
    }
}

pub fn verify_identity(lattice: &ClassLattice, lhs: &LinearForm, rhs: &LinearForm) -> Result<Verdict> {
    let claim = lhs.sub(rhs);
    lattice.check_declared(&claim)?;
    let red = lattice.reduce(&claim, &[]);
    let residual = lattice.to_form(&red.residual);
    let residual = LinearForm { constant: claim.constant.clone(), ..residual };
    let holds = residual.is_zero();
    let trace = lattice
        .relations
        .iter()
        .zip(red.combo)
        .filter(|(_, c)| !c.is_zero())
        .map(|(r, c)| TraceStep { relation: r.label.clone(), coefficient: c })
        .collect();
    Ok(Verdict { holds, trace, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    fn lattice(symbols: &[&str], lets: &[(&str, i64)], rels: &[&str]) -> (ClassLattice, BTreeSet<String>, BTreeMap<String, BigRational>) {
        let syms: BTreeSet<String> = symbols.iter().map(|s| s.to_string()).collect();
        let consts: BTreeMap<String, BigRational> =
            lets.iter().map(|(k, v)| (k.to_string(), BigRational::from_integer((*v).into()))).collect();
        let mut l = ClassLattice::new(symbols.iter().map(|s| s.to_string()).collect());
        let scope = Scope { symbols: &syms, constants: &consts };
        for (i, r) in rels.iter().enumerate() {
            let (a, b) = r.split_once("==").unwrap();
            l.add_relation(&format!("r{i}"), &parse_linear(a, &scope).unwrap(), &parse_linear(b, &scope).unwrap())
                .unwrap();
        }
        (l, syms, consts)
    }

    #[test]
    fn exceptional_divisor_identity() {
        let (l, syms, consts) = lattice(
            &["mKYp", "Et", "Ep", "fKX", "fH"],
            &[("z", 2)],
            &["Ep == z*mKYp - (z+1)*Et", "mKYp == fKX - Ep", "fKX == (z+1)*fH"],
        );
        let scope = Scope { symbols: &syms, constants: &consts };
        let v = verify_identity(&l, &parse_linear("mKYp - Et", &scope).unwrap(), &parse_linear("fH", &scope).unwrap())
            .unwrap();
        assert!(v.holds);
        assert_eq!(v.trace.len(), 3);
        let w = verify_identity(&l, &parse_linear("mKYp", &scope).unwrap(), &parse_linear("fH", &scope).unwrap())
            .unwrap();
        assert!(!w.holds);
        assert!(l.degenerate_symbols().is_empty());
    }

    #[test]
    fn coefficient_extraction() {
        let (l, syms, consts) = lattice(
            &["mK", "H", "LA", "E", "F", "muM"],
            &[("N", 7), ("dimA", 4)],
            &["mK == (N+1)*H + (dimA-3)*LA", "E == H - LA", "H == muM - 1/2*F"],
        );
        let scope = Scope { symbols: &syms, constants: &consts };
        let over: Vec<String> = ["muM", "F", "E"].iter().map(|s| s.to_string()).collect();
        let mk = parse_linear("mK", &scope).unwrap();
        assert_eq!(l.coefficient_in(&mk, &over, "E").unwrap(), BigRational::from_integer((-1).into()));
        assert_eq!(l.coefficient_in(&mk, &over, "muM").unwrap(), BigRational::from_integer(9.into()));
        let short: Vec<String> = vec!["muM".into()];
        assert!(l.coefficient_in(&mk, &short, "muM").is_err());
    }

    #[test]
    fn degenerate_relations_are_detected() {
        let (l, _, _) = lattice(&["a", "b"], &[], &["a == b", "a == 2*b"]);
        assert_eq!(l.degenerate_symbols(), vec!["a".to_string(), "b".to_string()]);
    }
}
