use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::prime::SmallPrime;
use crate::error::{Error, Result};

/// Exponent vector, always as long as the ring has variables.
pub type Monomial = Vec<u32>;

/// Sparse polynomial over the integers in a fixed, ordered set of variables.
///
/// Invariant: no stored coefficient is zero, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Monomial, BigInt>,
}

pub fn ring(names: &[&str]) -> Arc<Vec<String>> {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

impl Polynomial {
    pub fn zero(vars: &Arc<Vec<String>>) -> Self {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<Vec<String>>, c: impl Into<BigInt>) -> Self {
        let mut f = Self::zero(vars);
        f.add_term(vec![0; vars.len()], c.into());
        f
    }

    pub fn var(vars: &Arc<Vec<String>>, index: usize) -> Self {
        let mut m = vec![0; vars.len()];
        m[index] = 1;
        let mut f = Self::zero(vars);
        f.add_term(m, BigInt::one());
        f
    }

    /// Linear form `sum coeffs[i] * vars[i]`.
    pub fn linear(vars: &Arc<Vec<String>>, coeffs: &[i64]) -> Self {
        assert_eq!(coeffs.len(), vars.len());
        let mut f = Self::zero(vars);
        for (i, &c) in coeffs.iter().enumerate() {
            let mut m = vec![0; vars.len()];
            m[i] = 1;
            f.add_term(m, BigInt::from(c));
        }
        f
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        debug_assert_eq!(m.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Coefficient vector of a linear form, or `None` if some term has degree != 1.
    pub fn linear_coefficients(&self) -> Option<Vec<BigInt>> {
        let mut out = vec![BigInt::zero(); self.arity()];
        for (m, c) in &self.terms {
            let mut it = m.iter().enumerate().filter(|(_, &e)| e > 0);
            match (it.next(), it.next()) {
                (Some((i, 1)), None) => out[i] = c.clone(),
                _ => return None,
            }
        }
        Some(out)
    }

    fn same_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials live in different rings"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_ring(other);
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.vars, 1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal derivative with respect to variable `index`.
    pub fn partial(&self, index: usize) -> Self {
        assert!(index < self.arity(), "variable index out of range");
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m[index];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[index] = e - 1;
            out.add_term(m2, c * BigInt::from(e));
        }
        out
    }

    /// Value mod p at `pt`.
    pub fn eval(&self, pt: &[u64], p: SmallPrime) -> Result<u64> {
        if pt.len() != self.arity() {
            return Err(Error::Arity { expected: self.arity(), got: pt.len() });
        }
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut t = p.reduce_bigint(c);
            for (&x, &e) in pt.iter().zip(m) {
                if e > 0 {
                    t = p.mul(t, p.pow(x % p.get(), e as u64));
                }
            }
            acc = p.add(acc, t);
        }
        Ok(acc)
    }

    /// Composition: replaces variable `i` by `images[i]` (all in one target ring).
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.arity());
        let target = images
            .first()
            .map(|f| f.vars.clone())
            .unwrap_or_else(|| Arc::new(Vec::new()));
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|f| vec![Polynomial::constant(&target, 1), f.clone()])
            .collect();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Same polynomial viewed in a ring with the same variable names.
    pub fn rebase(&self, vars: &Arc<Vec<String>>) -> Polynomial {
        assert_eq!(&self.vars, vars);
        Polynomial { vars: vars.clone(), terms: self.terms.clone() }
    }

    fn display_order(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{a}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
