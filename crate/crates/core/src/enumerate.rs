//! Exhaustive enumeration of P^n(F_p).
//!
//! Index bijection: points are grouped by the position `k` of their leading 1
//! (k = 0 first); group `k` holds `p^(n-k)` points whose trailing coordinates
//! `k+1..=n` run through base-p digits of the in-group offset, most significant
//! digit first. Index `0` is `(1,0,...,0)`, the last index is `(0,...,0,1)`.

use std::ops::Range;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::algebra::SmallPrime;
use crate::error::{Error, Result};

/// Largest number of points a single scan may visit unless raised explicitly.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const DEFAULT_CHUNKS: usize = 64;
pub const DEFAULT_SAMPLE_CAP: usize = 1024;

/// `(p^(n+1) - 1) / (p - 1)`, exact.
pub fn proj_point_count(n: usize, p: SmallPrime) -> BigUint {
    let q = BigUint::from(p.get());
    (q.pow(n as u32 + 1) - BigUint::one()) / (BigUint::from(p.get() - 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanPlan {
    pub ambient_dim: usize,
    pub prime: SmallPrime,
    pub chunk_count: usize,
    total: u64,
}

impl ScanPlan {
    pub fn new(ambient_dim: usize, prime: SmallPrime, chunk_count: usize) -> Result<Self> {
        Self::with_budget(ambient_dim, prime, chunk_count, DEFAULT_BUDGET)
    }

    pub fn with_budget(
        ambient_dim: usize,
        prime: SmallPrime,
        chunk_count: usize,
        budget: u64,
    ) -> Result<Self> {
        let count = proj_point_count(ambient_dim, prime);
        let total = count
            .to_u64()
            .filter(|&t| t <= budget)
            .ok_or_else(|| Error::BudgetExceeded { points: count.to_string(), budget })?;
        Ok(ScanPlan { ambient_dim, prime, chunk_count: chunk_count.max(1), total })
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Contiguous index range of chunk `k`; the ranges partition `[0, total)`.
    pub fn chunk_range(&self, k: usize) -> Range<u64> {
        let c = self.chunk_count as u128;
        let t = self.total as u128;
        let lo = (t * k as u128 / c) as u64;
        let hi = (t * (k as u128 + 1) / c) as u64;
        lo..hi
    }
}

/// The normalized point with the given index.
pub fn point_at(n: usize, p: SmallPrime, mut index: u64) -> Vec<u64> {
    let q = p.get();
    let mut pt = vec![0; n + 1];
    for k in 0..=n {
        let size = q.pow((n - k) as u32);
        if index < size {
            pt[k] = 1;
            for j in (k + 1..=n).rev() {
                pt[j] = index % q;
                index /= q;
            }
            return pt;
        }
        index -= size;
    }
    panic!("index out of range for P^{n}(F_{q})");
}

/// Inverse of [`point_at`] for a normalized point.
pub fn index_of(pt: &[u64], p: SmallPrime) -> u64 {
    let q = p.get();
    let n = pt.len() - 1;
    let k = pt.iter().position(|&c| c != 0).expect("nonzero point");
    let offset: u64 = (0..k).map(|j| q.pow((n - j) as u32)).sum();
    offset + pt[k + 1..].iter().fold(0, |acc, &c| acc * q + c)
}

/// Calls `f` on every point with index in `range`, in index order.
pub fn for_each_in_range(n: usize, p: SmallPrime, range: Range<u64>, mut f: impl FnMut(&[u64])) {
    if range.is_empty() {
        return;
    }
    let q = p.get();
    let mut pt = point_at(n, p, range.start);
    let mut lead = pt.iter().position(|&c| c == 1).unwrap();
    for _ in range {
        f(&pt);
        let mut j = n;
        loop {
            if j == lead {
                pt[lead] = 0;
                lead += 1;
                if lead <= n {
                    pt[lead] = 1;
                }
                break;
            }
            pt[j] += 1;
            if pt[j] < q {
                break;
            }
            pt[j] = 0;
            j -= 1;
        }
    }
}

/// Sequential stream of all points of a plan, in index order.
pub fn enumerate_points(plan: &ScanPlan) -> impl Iterator<Item = Vec<u64>> + '_ {
    (0..plan.chunk_count).flat_map(move |k| enumerate_chunk(plan, k))
}

pub fn enumerate_chunk(plan: &ScanPlan, k: usize) -> impl Iterator<Item = Vec<u64>> {
    let (n, p) = (plan.ambient_dim, plan.prime);
    plan.chunk_range(k).map(move |i| point_at(n, p, i))
}

/// Folds over all points: chunks run in parallel, partial results merge in chunk order.
pub fn scan_fold<A, I, S, M>(plan: &ScanPlan, init: I, step: S, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync,
    S: Fn(&mut A, &[u64]) + Sync,
    M: Fn(A, A) -> A,
{
    let parts: Vec<A> = (0..plan.chunk_count)
        .into_par_iter()
        .map(|k| {
            let mut acc = init();
            for_each_in_range(plan.ambient_dim, plan.prime, plan.chunk_range(k), |pt| {
                step(&mut acc, pt)
            });
            acc
        })
        .collect();
    parts.into_iter().reduce(merge).unwrap_or_else(init)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanResult {
    pub total_examined: u64,
    pub matched: u64,
    pub sample: Vec<Vec<u64>>,
}

impl ScanResult {
    /// Associative merge; `self` precedes `other` in index order.
    pub fn merge(mut self, other: ScanResult, cap: usize) -> ScanResult {
        self.total_examined += other.total_examined;
        self.matched += other.matched;
        let room = cap.saturating_sub(self.sample.len());
        self.sample.extend(other.sample.into_iter().take(room));
        self
    }

    pub fn record(&mut self, pt: &[u64], hit: bool, cap: usize) {
        self.total_examined += 1;
        if hit {
            self.matched += 1;
            if self.sample.len() < cap {
                self.sample.push(pt.to_vec());
            }
        }
    }
}

pub fn scan<P>(plan: &ScanPlan, sample_cap: usize, predicate: P) -> ScanResult
where
    P: Fn(&[u64]) -> bool + Sync,
{
    scan_fold(
        plan,
        ScanResult::default,
        |acc, pt| acc.record(pt, predicate(pt), sample_cap),
        |a, b| a.merge(b, sample_cap),
    )
}

/// Points of the projectivized span of `basis` (independent vectors mod p).
#[derive(Clone, Debug)]
pub struct SubspacePlan {
    pub inner: ScanPlan,
    pub basis: Vec<Vec<u64>>,
    pub ambient_len: usize,
}

impl SubspacePlan {
    pub fn new(basis: Vec<Vec<u64>>, ambient_len: usize, p: SmallPrime, chunks: usize) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::Dimension("empty linear subspace".into()));
        }
        Ok(SubspacePlan { inner: ScanPlan::new(basis.len() - 1, p, chunks)?, basis, ambient_len })
    }

    /// Maps parameter coordinates to a normalized ambient point.
    pub fn embed(&self, t: &[u64], out: &mut [u64]) {
        let p = self.inner.prime;
        out.fill(0);
        for (c, b) in t.iter().zip(&self.basis) {
            if *c == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(b) {
                *o = p.add(*o, p.mul(*c, x));
            }
        }
        p.normalize(out).expect("basis vectors are independent");
    }
}

/// Like [`scan_fold`], over the points of a linear subspace, in parameter index order.
pub fn subspace_fold<A, I, S, M>(plan: &SubspacePlan, init: I, step: S, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync,
    S: Fn(&mut A, &[u64]) + Sync,
    M: Fn(A, A) -> A,
{
    let inner = &plan.inner;
    let parts: Vec<A> = (0..inner.chunk_count)
        .into_par_iter()
        .map(|k| {
            let mut acc = init();
            let mut buf = vec![0; plan.ambient_len];
            for_each_in_range(inner.ambient_dim, inner.prime, inner.chunk_range(k), |t| {
                plan.embed(t, &mut buf);
                step(&mut acc, &buf)
            });
            acc
        })
        .collect();
    parts.into_iter().reduce(merge).unwrap_or_else(init)
}
