//! Degrees, dimension estimates from point counts, and singular-locus scans.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::algebra::{kernel_mod_p, ModSystem, Polynomial, SmallPrime};
use crate::catalog::{RankLocusSpec, VarietySpec};
use crate::enumerate::{
    proj_point_count, scan_fold, subspace_fold, ScanPlan, ScanResult, SubspacePlan, DEFAULT_BUDGET,
    DEFAULT_CHUNKS, DEFAULT_SAMPLE_CAP,
};
use crate::error::{Error, Result};

/// Degree of a complete intersection of hypersurfaces of the given degrees.
pub fn ci_degree(degrees: &[u32]) -> u64 {
    degrees.iter().map(|&d| u64::from(d)).product()
}

/// Standard Young tableaux of shape `2 x k`, counted by filling cells in order.
pub fn count_syt_two_rows(k: usize) -> u64 {
    // state: (cells in row 1, cells in row 2); row 2 never longer than row 1
    fn go(a: usize, b: usize, k: usize) -> u64 {
        if a == k && b == k {
            return 1;
        }
        let mut n = 0;
        if a < k {
            n += go(a + 1, b, k);
        }
        if b < a {
            n += go(a, b + 1, k);
        }
        n
    }
    go(0, 0, k)
}

/// Hook-length formula for shape `2 x k`: `(2k)! / (k! (k+1)!)`.
pub fn hook_length_two_rows(k: usize) -> u64 {
    let mut hooks = BigUint::from(1u32);
    for j in 1..=k {
        // row 1 cell j: arm k - j, leg 1; row 2 cell j: arm k - j, leg 0
        hooks *= BigUint::from((k - j + 2) as u64) * BigUint::from((k - j + 1) as u64);
    }
    let fact: BigUint = (1..=2 * k as u64).map(BigUint::from).product();
    (fact / hooks).to_u64().expect("small degree")
}

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
    if k > n {
        return 0;
    }
    let q = BigUint::from(q);
    let one = BigUint::from(1u32);
    let (mut num, mut den) = (one.clone(), one.clone());
    for i in 0..k {
        num *= q.pow(n - i) - &one;
        den *= q.pow(i + 1) - &one;
    }
    (num / den).to_u64().expect("fits in u64")
}

/// Degree of G(2, n) in its Plücker embedding, by tableau enumeration.
pub fn grassmann_degree(n: usize) -> Result<u64> {
    if n < 4 {
        return Err(Error::Dimension(format!("G(2,{n}) degree needs n >= 4")));
    }
    let d = count_syt_two_rows(n - 2);
    debug_assert_eq!(d, hook_length_two_rows(n - 2));
    Ok(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub chunks: usize,
    pub sample_cap: usize,
    pub budget: u64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { chunks: DEFAULT_CHUNKS, sample_cap: DEFAULT_SAMPLE_CAP, budget: DEFAULT_BUDGET }
    }
}

/// Point domain of a variety: the kernel of its linear generators, or all of P^n.
enum Domain {
    Full(ScanPlan),
    Linear(SubspacePlan),
    Empty,
}

fn domain(spec: &VarietySpec, p: SmallPrime, opts: &ScanOptions) -> Result<(Domain, ModSystem)> {
    let arity = spec.vars.len();
    let (linear, rest): (Vec<&Polynomial>, Vec<&Polynomial>) =
        spec.generators.iter().partition(|g| g.total_degree() == Some(1));
    let rest: Vec<Polynomial> = rest.into_iter().cloned().collect();
    let sys = ModSystem::new(&rest, p, arity);
    if linear.is_empty() {
        return Ok((Domain::Full(ScanPlan::with_budget(spec.ambient_dim, p, opts.chunks, opts.budget)?), sys));
    }
    let rows: Vec<Vec<u64>> = linear
        .iter()
        .map(|f| f.linear_coefficients().unwrap().iter().map(|c| p.reduce_bigint(c)).collect())
        .collect();
    let basis = kernel_mod_p(&rows, arity, p);
    if basis.is_empty() {
        return Ok((Domain::Empty, sys));
    }
    let count = proj_point_count(basis.len() - 1, p);
    if count > BigUint::from(opts.budget) {
        return Err(Error::BudgetExceeded { points: count.to_string(), budget: opts.budget });
    }
    Ok((Domain::Linear(SubspacePlan::new(basis, arity, p, opts.chunks)?), sys))
}

/// Folds over the F_p-points of a variety; order and merging are chunk-deterministic.
pub fn fold_variety<A, I, S, M>(
    spec: &VarietySpec,
    p: SmallPrime,
    opts: &ScanOptions,
    init: I,
    step: S,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync,
    S: Fn(&mut A, &[u64], &ModSystem) + Sync,
    M: Fn(A, A) -> A,
{
    let (dom, sys) = domain(spec, p, opts)?;
    let on = |acc: &mut A, pt: &[u64]| {
        if sys.vanishes(pt) {
            step(acc, pt, &sys)
        }
    };
    Ok(match dom {
        Domain::Full(plan) => scan_fold(&plan, &init, on, &merge),
        Domain::Linear(plan) => subspace_fold(&plan, &init, on, &merge),
        Domain::Empty => init(),
    })
}

/// Number of F_p-points of the variety, with a bounded sample.
pub fn count_points(spec: &VarietySpec, p: SmallPrime, opts: &ScanOptions) -> Result<ScanResult> {
    let cap = opts.sample_cap;
    fold_variety(
        spec,
        p,
        opts,
        ScanResult::default,
        |acc, pt, _| acc.record(pt, true, cap),
        |a, b| a.merge(b, cap),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionEstimate {
    pub counts: BTreeMap<u64, u64>,
    /// Largest `d` with `#P^d(F_p) <= count`, per prime; `None` for an empty set.
    pub per_prime: BTreeMap<u64, Option<usize>>,
    /// The `d` minimizing `|ln count - ln #P^d(F_p)|`, kept for comparison.
    pub log_nearest: BTreeMap<u64, Option<usize>>,
    pub estimated_dim: Option<usize>,
    pub consistent: bool,
}

fn proj_count_f64(d: usize, p: u64) -> f64 {
    ((p as f64).powi(d as i32 + 1) - 1.0) / (p as f64 - 1.0)
}

/// Largest `d` with `(p^(d+1) - 1)/(p - 1) <= count`.
pub fn floor_dimension(count: u64, p: SmallPrime) -> Option<usize> {
    if count == 0 {
        return None;
    }
    let q = u128::from(p.get());
    let (mut d, mut size, mut pow) = (0usize, 1u128, q);
    loop {
        let next = size + pow;
        if next > u128::from(count) {
            return Some(d);
        }
        size = next;
        pow *= q;
        d += 1;
    }
}

pub fn log_nearest_dimension(count: u64, p: SmallPrime, max_dim: usize) -> Option<usize> {
    if count == 0 {
        return None;
    }
    let lc = (count as f64).ln();
    (0..=max_dim).min_by(|&a, &b| {
        let da = (lc - proj_count_f64(a, p.get()).ln()).abs();
        let db = (lc - proj_count_f64(b, p.get()).ln()).abs();
        da.total_cmp(&db)
    })
}

pub fn estimate_dimension(
    spec: &VarietySpec,
    primes: &[SmallPrime],
    opts: &ScanOptions,
) -> Result<DimensionEstimate> {
    let mut est = DimensionEstimate {
        counts: BTreeMap::new(),
        per_prime: BTreeMap::new(),
        log_nearest: BTreeMap::new(),
        estimated_dim: None,
        consistent: true,
    };
    for &p in primes {
        let count = count_points(spec, p, &ScanOptions { sample_cap: 0, ..*opts })?.matched;
        est.counts.insert(p.get(), count);
        est.per_prime.insert(p.get(), floor_dimension(count, p));
        est.log_nearest.insert(p.get(), log_nearest_dimension(count, p, spec.ambient_dim));
    }
    let mut dims = est.per_prime.values();
    est.estimated_dim = dims.next().copied().flatten();
    est.consistent = est.per_prime.values().all(|&d| d == est.estimated_dim);
    Ok(est)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularScanReport {
    pub prime: u64,
    pub total_on_variety: u64,
    pub jacobian_singular: u64,
    pub rank_locus: u64,
    pub both: u64,
    pub sets_equal: bool,
    pub symmetric_difference_sample: Vec<Vec<u64>>,
    pub jacobian_singular_sample: Vec<Vec<u64>>,
    /// Jacobian-singular points on each declared plane of the spec.
    pub singular_on_planes: BTreeMap<String, u64>,
}

#[derive(Default)]
struct SingAcc {
    on: u64,
    sing: u64,
    rank: u64,
    both: u64,
    diff: Vec<Vec<u64>>,
    sample: Vec<Vec<u64>>,
    planes: Vec<u64>,
}

fn plane_rows(spec: &VarietySpec, p: SmallPrime) -> Vec<(String, Vec<Vec<u64>>)> {
    spec.planes
        .iter()
        .map(|pl| {
            let rows = pl
                .forms
                .iter()
                .map(|f| f.linear_coefficients().unwrap().iter().map(|c| p.reduce_bigint(c)).collect())
                .collect();
            (pl.name.clone(), rows)
        })
        .collect()
}

fn on_plane(rows: &[Vec<u64>], pt: &[u64], p: SmallPrime) -> bool {
    rows.iter().all(|r| r.iter().zip(pt).fold(0, |a, (&c, &x)| p.add(a, p.mul(c, x))) == 0)
}

/// Jacobian-singular points (rank below the codimension) against an optional rank locus.
///
/// Rank is taken for the full generator list; when a rank locus is absent every
/// count involving it stays zero and `sets_equal` is false.
pub fn singular_scan(
    spec: &VarietySpec,
    locus: Option<&RankLocusSpec>,
    p: SmallPrime,
    opts: &ScanOptions,
) -> Result<SingularScanReport> {
    let codim = spec.codim();
    let arity = spec.vars.len();
    let full = ModSystem::new(&spec.generators, p, arity);
    let planes = plane_rows(spec, p);
    let cap = opts.sample_cap;
    let acc = fold_variety(
        spec,
        p,
        opts,
        || SingAcc { planes: vec![0; planes.len()], ..SingAcc::default() },
        |acc, pt, _| {
            acc.on += 1;
            let sing = full.jacobian_rank_unchecked(pt) < codim;
            let rank = locus.is_some_and(|l| l.member_unchecked(pt, p));
            acc.sing += u64::from(sing);
            acc.rank += u64::from(rank);
            acc.both += u64::from(sing && rank);
            if sing {
                if acc.sample.len() < cap {
                    acc.sample.push(pt.to_vec());
                }
                for (k, (_, rows)) in planes.iter().enumerate() {
                    acc.planes[k] += u64::from(on_plane(rows, pt, p));
                }
            }
            if locus.is_some() && sing != rank && acc.diff.len() < cap {
                acc.diff.push(pt.to_vec());
            }
        },
        |mut a, b| {
            a.on += b.on;
            a.sing += b.sing;
            a.rank += b.rank;
            a.both += b.both;
            a.diff.extend(b.diff);
            a.diff.truncate(cap);
            a.sample.extend(b.sample);
            a.sample.truncate(cap);
            for (x, y) in a.planes.iter_mut().zip(b.planes) {
                *x += y;
            }
            a
        },
    )?;
    Ok(SingularScanReport {
        prime: p.get(),
        total_on_variety: acc.on,
        jacobian_singular: acc.sing,
        rank_locus: acc.rank,
        both: acc.both,
        sets_equal: locus.is_some() && acc.sing == acc.both && acc.rank == acc.both,
        symmetric_difference_sample: acc.diff,
        jacobian_singular_sample: acc.sample,
        singular_on_planes: planes.into_iter().map(|(n, _)| n).zip(acc.planes).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> SmallPrime {
        SmallPrime::new(n).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(ci_degree(&[2, 3]), 6);
        assert_eq!(ci_degree(&[2, 2, 2]), 8);
        assert_eq!(grassmann_degree(4).unwrap(), 2);
        assert_eq!(grassmann_degree(5).unwrap(), 5);
        assert_eq!(grassmann_degree(6).unwrap(), 14);
        for n in 4..=8 {
            assert_eq!(count_syt_two_rows(n - 2), hook_length_two_rows(n - 2));
        }
    }

    #[test]
    fn floor_rule() {
        assert_eq!(floor_dimension(7, p(2)), Some(2));
        assert_eq!(floor_dimension(6, p(2)), Some(1));
        assert_eq!(floor_dimension(1, p(3)), Some(0));
        assert_eq!(floor_dimension(0, p(3)), None);
        assert_eq!(log_nearest_dimension(40, p(3), 5), Some(3));
    }
}
