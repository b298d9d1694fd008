//! Projective-bundle resolutions as incidence correspondences, probed fiberwise over F_p.
//!
//! A resolution `Σ' -> Σ̄` over a base `S` is the locus of `(t, s)` with each
//! block of `t` in the fiber subspace over `s`. The fiber over `t` is found by
//! scanning `S(F_p)` and keeping every `s` that passes the rule.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::algebra::linalg::rref_mod_p;
use crate::algebra::{format_point, in_span_mod_p, matrix_rank_mod_p, ModSystem, Polynomial, SmallPrime};
use crate::catalog::g8::full_bivector;
use crate::catalog::{build_case, g4_matrix, p3_spec, plucker_pairs, CaseId, VarietySpec};
use crate::enumerate::{scan, ScanPlan, DEFAULT_CHUNKS};
use crate::error::{Error, Result};
use crate::invariants::{count_points, ScanOptions};

/// Index of the pair `(i, j)`, `1 <= i < j <= n`, in [`plucker_pairs`] order.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    // pairs starting with a < i, then the offset within row i
    (1..i).map(|a| n - a).sum::<usize>() + (j - i - 1)
}

/// Whether a vector of `wedge^2 k^n` satisfies every Plücker relation mod p.
pub fn is_decomposable(v: &[u64], n: usize, p: SmallPrime) -> bool {
    let c = |i, j| v[pair_index(n, i, j)];
    (1..=n).tuple_combinations().all(|(i, j, k, l)| {
        let a = p.mul(c(i, j), c(k, l));
        let b = p.mul(c(i, k), c(j, l));
        let d = p.mul(c(i, l), c(j, k));
        p.add(p.sub(a, b), d) == 0
    })
}

/// `u ^ w` in [`plucker_pairs`] coordinates.
pub fn wedge(u: &[u64], w: &[u64], p: SmallPrime) -> Vec<u64> {
    plucker_pairs(u.len())
        .into_iter()
        .map(|(i, j)| p.sub(p.mul(u[i - 1], w[j - 1]), p.mul(u[j - 1], w[i - 1])))
        .collect()
}

/// Reduced-echelon basis of the 2-subspace whose Plücker vector is `v`.
///
/// Contracting the bivector with `e_a*` and `e_b*` for a nonzero coordinate
/// `v_ab` yields two independent vectors of the subspace.
pub fn subspace_from_plucker(v: &[u64], n: usize, p: SmallPrime) -> Result<[Vec<u64>; 2]> {
    if v.len() != n * (n - 1) / 2 {
        return Err(Error::Arity { expected: n * (n - 1) / 2, got: v.len() });
    }
    if !is_decomposable(v, n, p) {
        return Err(Error::NotDecomposable(format_point(v)));
    }
    let k = v.iter().position(|&c| c != 0).ok_or(Error::ZeroPoint)?;
    let (a, b) = plucker_pairs(n)[k];
    // column `c` of the skew matrix of v
    let column = |c: usize| -> Vec<u64> {
        (1..=n)
            .map(|i| match i.cmp(&c) {
                std::cmp::Ordering::Less => v[pair_index(n, i, c)],
                std::cmp::Ordering::Greater => p.neg(v[pair_index(n, c, i)]),
                std::cmp::Ordering::Equal => 0,
            })
            .collect()
    };
    let mut m = vec![column(b), column(a)];
    rref_mod_p(&mut m, p);
    let [u, w]: [Vec<u64>; 2] = m.try_into().unwrap();
    Ok([u, w])
}

fn rank_le(rows: &[&[u64]], bound: usize, p: SmallPrime) -> bool {
    matrix_rank_mod_p(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), p) <= bound
}

fn dot(a: &[u64], b: &[u64], p: SmallPrime) -> u64 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| p.add(acc, p.mul(x, y)))
}

/// Resolutions with a pinned base and fiber rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberCase {
    G8,
    G4,
    G6Q,
    G5,
}

impl FiberCase {
    pub fn for_case(case: CaseId) -> Result<FiberCase> {
        match case {
            CaseId::G8SigmaBar => Ok(FiberCase::G8),
            CaseId::G4SigmaBar => Ok(FiberCase::G4),
            CaseId::G6qSigmaBar => Ok(FiberCase::G6Q),
            CaseId::G5SigmaBar => Ok(FiberCase::G5),
            other => Err(Error::Unsupported(format!("no fiber probe for {}", other.as_str()))),
        }
    }

    pub fn target(self) -> CaseId {
        match self {
            FiberCase::G8 => CaseId::G8SigmaBar,
            FiberCase::G4 => CaseId::G4SigmaBar,
            FiberCase::G6Q => CaseId::G6qSigmaBar,
            FiberCase::G5 => CaseId::G5SigmaBar,
        }
    }

    /// B5, B6, Q3 and P3 respectively.
    pub fn base_spec(self) -> VarietySpec {
        match self {
            FiberCase::G8 => build_case(CaseId::B5),
            FiberCase::G4 => build_case(CaseId::B6),
            FiberCase::G6Q => build_case(CaseId::Q3G6q),
            FiberCase::G5 => p3_spec(),
        }
    }

    /// Whether `(t, s)` lies on the incidence correspondence.
    pub fn in_fiber(self, s: &[u64], t: &[u64], p: SmallPrime) -> bool {
        match self {
            FiberCase::G8 => {
                let (x, y) = (&t[0..5], &t[5..12]);
                let Ok([u, w]) = subspace_from_plucker(&full_bivector(s, p), 5, p) else {
                    return false;
                };
                rank_le(&[&u, &w, x], 2, p) && rank_le(&[s, y], 1, p)
            }
            FiberCase::G4 => {
                let (y, x) = (&t[0..3], &t[3..6]);
                let (w, u) = segre_factors(s, p);
                let m = g4_matrix(&t[6..14], p);
                let pairing = (0..3)
                    .flat_map(|i| (0..3).map(move |j| (i, j)))
                    .fold(0, |acc, (i, j)| p.add(acc, p.mul(m[i][j], p.mul(w[i], u[j]))));
                rank_le(&[&w, y], 1, p) && rank_le(&[&u, x], 1, p) && pairing == 0
            }
            FiberCase::G6Q => {
                let (z, x, y) = (&t[0..4], &t[4..9], &t[9..14]);
                let v = q3_bivector(s);
                let Ok([a, b]) = subspace_from_plucker(&v, 4, p) else {
                    return false;
                };
                rank_le(&[&a, &b, z], 2, p) && rank_le(&[s, x], 1, p) && dot(y, s, p) == 0
            }
            FiberCase::G5 => {
                let x = &t[0..4];
                let annihilates = (0..3).all(|i| dot(&t[4 + 4 * i..8 + 4 * i], s, p) == 0);
                annihilates && rank_le(&[s, x], 1, p)
            }
        }
    }
}

/// The G(2, V') coordinates (23, 24, 25, 34, 35, 45) of a point of Q3, with `x24 = x35`.
pub fn q3_bivector(s: &[u64]) -> Vec<u64> {
    vec![s[0], s[3], s[1], s[2], s[3], s[4]]
}

/// Splits a rank-one traceless 3x3 matrix `w u^T` (`p33` eliminated) into `(w, u)`.
pub fn segre_factors(s: &[u64], p: SmallPrime) -> ([u64; 3], [u64; 3]) {
    let p33 = p.neg(p.add(s[0], s[4]));
    let m = [[s[0], s[1], s[2]], [s[3], s[4], s[5]], [s[6], s[7], p33]];
    let (r, c) = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .find(|&(i, j)| m[i][j] != 0)
        .expect("nonzero point");
    let w = [m[0][c], m[1][c], m[2][c]];
    let u = m[r];
    (w, u)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Empty,
    Point,
    P1,
    P2,
    /// Only assigned after an independent count agrees.
    Surface(u64),
    Other(u64),
}

impl Shape {
    pub fn classify(count: u64, p: SmallPrime) -> Shape {
        let q = p.get();
        match count {
            0 => Shape::Empty,
            1 => Shape::Point,
            c if c == q + 1 => Shape::P1,
            c if c == q * q + q + 1 => Shape::P2,
            c => Shape::Other(c),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Empty => write!(f, "empty"),
            Shape::Point => write!(f, "point"),
            Shape::P1 => write!(f, "P1"),
            Shape::P2 => write!(f, "P2"),
            Shape::Surface(c) => write!(f, "surface({c})"),
            Shape::Other(c) => write!(f, "other({c})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberReport {
    pub target_point: Vec<u64>,
    pub fiber_points: Vec<Vec<u64>>,
    pub fiber_count: u64,
    pub shape: Shape,
}

impl FiberReport {
    /// Marks the fiber a surface when an independently counted surface has the same size.
    pub fn confirm_surface(&mut self, oracle_count: u64) -> bool {
        let ok = oracle_count == self.fiber_count;
        if ok {
            self.shape = Shape::Surface(oracle_count);
        }
        ok
    }
}

/// A fiber case at a fixed prime, with the base points enumerated once.
#[derive(Clone, Debug)]
pub struct FiberProbe {
    pub case: FiberCase,
    pub prime: SmallPrime,
    pub base_points: Vec<Vec<u64>>,
    target: ModSystem,
}

impl FiberProbe {
    pub fn new(case: FiberCase, p: SmallPrime) -> Result<FiberProbe> {
        let base = case.base_spec();
        let sys = ModSystem::new(&base.generators, p, base.vars.len());
        let plan = ScanPlan::new(base.ambient_dim, p, DEFAULT_CHUNKS)?;
        let base_points = scan(&plan, usize::MAX, |pt| sys.vanishes(pt)).sample;
        let spec = build_case(case.target());
        let target = ModSystem::new(&spec.generators, p, spec.vars.len());
        Ok(FiberProbe { case, prime: p, base_points, target })
    }

    pub fn fiber(&self, t: &[u64]) -> Result<FiberReport> {
        if t.len() != self.target.arity {
            return Err(Error::Arity { expected: self.target.arity, got: t.len() });
        }
        if !self.target.vanishes(t) {
            return Err(Error::PointOffVariety(format_point(t)));
        }
        let fiber_points: Vec<Vec<u64>> = self
            .base_points
            .iter()
            .filter(|s| self.case.in_fiber(s, t, self.prime))
            .cloned()
            .collect();
        let fiber_count = fiber_points.len() as u64;
        Ok(FiberReport {
            target_point: t.to_vec(),
            fiber_points,
            fiber_count,
            shape: Shape::classify(fiber_count, self.prime),
        })
    }
}

pub fn fiber_over(case: FiberCase, t: &[u64], p: SmallPrime) -> Result<FiberReport> {
    FiberProbe::new(case, p)?.fiber(t)
}

/// Every 2-dimensional subspace of `F_p^m`, as its reduced-echelon basis.
pub fn two_subspaces(m: usize, p: SmallPrime) -> Vec<[Vec<u64>; 2]> {
    let q = p.get();
    let mut out = Vec::new();
    for (a, b) in (0..m).tuple_combinations() {
        // free slots: row 1 after a except b, row 2 after b
        let free1: Vec<usize> = (a + 1..m).filter(|&j| j != b).collect();
        let free2: Vec<usize> = (b + 1..m).collect();
        let slots = free1.len() + free2.len();
        for code in 0..q.pow(slots as u32) {
            let mut r1 = vec![0; m];
            let mut r2 = vec![0; m];
            r1[a] = 1;
            r2[b] = 1;
            let mut c = code;
            for &j in free1.iter() {
                r1[j] = c % q;
                c /= q;
            }
            for &j in free2.iter() {
                r2[j] = c % q;
                c /= q;
            }
            out.push([r1, r2]);
        }
    }
    out
}

/// The two sides of the decomposability criterion for `[e1 ^ x + y]` in
/// `G(2, <e1> + V') ∩ P(e1 ^ V' + U)`.
///
/// `side1`: `y ∈ U` and `e1 ^ x + y` satisfies the Plücker relations.
/// `side2`: some 2-subspace `V2 ⊂ V'` has `wedge^2 V2 ⊂ U`, `x ∈ V2` and `y ∈ wedge^2 V2`.
pub fn linalg_equiv_check(
    x: &[u64],
    y: &[u64],
    u_basis: &[Vec<u64>],
    p: SmallPrime,
) -> Result<(bool, bool)> {
    let m = x.len();
    if !(4..=5).contains(&m) {
        return Err(Error::Dimension(format!("dim V' must be 4 or 5, got {m}")));
    }
    let pairs = m * (m - 1) / 2;
    if y.len() != pairs || u_basis.iter().any(|b| b.len() != pairs) {
        return Err(Error::Dimension(format!("bivectors of V' need {pairs} coordinates")));
    }
    let in_u = |v: &[u64]| v.iter().all(|&c| c == 0) || in_span_mod_p(u_basis, v, p);

    // e1 gets index 1, V' indices 2..=m+1
    let big: Vec<u64> = plucker_pairs(m + 1)
        .into_iter()
        .map(|(i, j)| if i == 1 { x[j - 2] } else { y[pair_index(m, i - 1, j - 1)] })
        .collect();
    let side1 = in_u(y) && is_decomposable(&big, m + 1, p);

    let side2 = two_subspaces(m, p).into_iter().any(|[a, b]| {
        let w = wedge(&a, &b, p);
        in_u(&w) && rank_le(&[&a, &b, x], 2, p) && rank_le(&[&w, y], 1, p)
    });
    Ok((side1, side2))
}

/// Outcome of sweeping the criterion over all `x`, all `y` and all coordinate subspaces `U`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinalgSweep {
    pub checked_nonzero_y: u64,
    pub agreements_nonzero_y: u64,
    pub checked_zero_y: u64,
    /// `y = 0` inputs with `side1` true and `side2` false.
    pub zero_y_one_way: u64,
    pub zero_y_example: Option<(Vec<u64>, Vec<u64>)>,
}

pub fn linalg_sweep(m: usize, p: SmallPrime) -> Result<LinalgSweep> {
    let pairs = m * (m - 1) / 2;
    let q = p.get();
    let vectors = |len: usize| -> Vec<Vec<u64>> {
        (0..q.pow(len as u32))
            .map(|mut c| {
                (0..len)
                    .map(|_| {
                        let d = c % q;
                        c /= q;
                        d
                    })
                    .collect()
            })
            .collect()
    };
    let xs = vectors(m);
    let ys = vectors(pairs);
    let mut out = LinalgSweep::default();
    for mask in 0u32..(1 << pairs) {
        let basis: Vec<Vec<u64>> = (0..pairs)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| (0..pairs).map(|j| u64::from(j == k)).collect())
            .collect();
        for x in &xs {
            for y in &ys {
                let zero_y = y.iter().all(|&c| c == 0);
                if zero_y && x.iter().all(|&c| c == 0) {
                    continue;
                }
                let (s1, s2) = linalg_equiv_check(x, y, &basis, p)?;
                if zero_y {
                    out.checked_zero_y += 1;
                    if s1 && !s2 {
                        out.zero_y_one_way += 1;
                        if out.zero_y_example.is_none() {
                            let u = (0..pairs).filter(|k| mask >> k & 1 == 1).map(|k| k as u64).collect();
                            out.zero_y_example = Some((x.clone(), u));
                        }
                    }
                } else {
                    out.checked_nonzero_y += 1;
                    out.agreements_nonzero_y += u64::from(s1 == s2);
                }
            }
        }
    }
    Ok(out)
}

/// Rational points of `spec` on the named plane, in enumeration order.
fn points_on_plane(spec: &VarietySpec, plane: &str, p: SmallPrime) -> Result<Vec<Vec<u64>>> {
    let mut on = spec.clone();
    on.generators.extend(spec.plane(plane)?.forms.iter().cloned());
    let opts = ScanOptions { sample_cap: usize::MAX, ..ScanOptions::default() };
    Ok(count_points(&on, p, &opts)?.sample)
}

/// Fiber counts over the whole exceptional plane of one case, keyed by a per-point class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlaneFiberTally {
    pub prime: u64,
    pub points: u64,
    /// `(class, fiber count) -> number of targets`.
    pub tally: BTreeMap<(u64, u64), u64>,
}

fn tally_plane(
    case: FiberCase,
    plane: &str,
    p: SmallPrime,
    class: impl Fn(&[u64]) -> u64 + Sync,
) -> Result<PlaneFiberTally> {
    let probe = FiberProbe::new(case, p)?;
    let targets = points_on_plane(&build_case(case.target()), plane, p)?;
    let counts: Vec<(u64, u64)> = targets
        .par_iter()
        .map(|t| Ok((class(t), probe.fiber(t)?.fiber_count)))
        .collect::<Result<_>>()?;
    let mut tally = BTreeMap::new();
    for key in counts {
        *tally.entry(key).or_insert(0) += 1;
    }
    Ok(PlaneFiberTally { prime: p.get(), points: targets.len() as u64, tally })
}

/// Genus 5 over the x = 0 plane, classed by the rank of the 3x4 block `M_y`.
pub fn g5_rank_tally(p: SmallPrime) -> Result<PlaneFiberTally> {
    tally_plane(FiberCase::G5, "pibar", p, |t| {
        let m: Vec<Vec<u64>> = t[4..16].chunks(4).map(<[u64]>::to_vec).collect();
        matrix_rank_mod_p(&m, p) as u64
    })
}

/// Genus 8 over the y = 0 plane; the class is constant.
pub fn g8_plane_tally(p: SmallPrime) -> Result<(PlaneFiberTally, Vec<Vec<u64>>)> {
    let probe = FiberProbe::new(FiberCase::G8, p)?;
    let targets = points_on_plane(&build_case(CaseId::G8SigmaBar), "pibar", p)?;
    let counts: Vec<u64> =
        targets.par_iter().map(|t| Ok(probe.fiber(t)?.fiber_count)).collect::<Result<_>>()?;
    let mut tally = BTreeMap::new();
    let mut jumping = Vec::new();
    for (t, &c) in targets.iter().zip(&counts) {
        *tally.entry((0, c)).or_insert(0) += 1;
        if c == p.get() + 1 {
            jumping.push(t[0..5].to_vec());
        }
    }
    Ok((PlaneFiberTally { prime: p.get(), points: targets.len() as u64, tally }, jumping))
}

/// The hyperplane of B6 paired with the matrix block of a genus-4 point.
pub fn g4_pairing_hyperplane(t: &[u64], p: SmallPrime) -> Polynomial {
    let m = g4_matrix(&t[6..14], p);
    let b6 = build_case(CaseId::B6);
    // p33 = -p11 - p22 folds m33 into the two diagonal coefficients
    let coeffs = [
        p.sub(m[0][0], m[2][2]),
        m[0][1],
        m[0][2],
        m[1][0],
        p.sub(m[1][1], m[2][2]),
        m[1][2],
        m[2][0],
        m[2][1],
    ];
    let c: Vec<i64> = coeffs.iter().map(|&v| v as i64).collect();
    Polynomial::linear(&b6.vars, &c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G4PlaneComparison {
    pub prime: u64,
    pub points: u64,
    pub agreements: u64,
    pub first_disagreement: Option<(Vec<u64>, u64, u64)>,
    /// `fiber count -> number of targets`.
    pub fiber_counts: BTreeMap<u64, u64>,
}

/// Over `x = y = 0`, compares each fiber count with the point count of `B6 ∩ H_t`
/// obtained from the B6 equations cut by the pairing hyperplane.
pub fn g4_plane_comparison(p: SmallPrime) -> Result<G4PlaneComparison> {
    let probe = FiberProbe::new(FiberCase::G4, p)?;
    let spec = build_case(CaseId::G4SigmaBar);
    let mut both = spec.clone();
    both.generators.extend(spec.plane("pibar2")?.forms.iter().cloned());
    let targets = points_on_plane(&both, "pibar1", p)?;
    let b6 = build_case(CaseId::B6);
    let opts = ScanOptions { sample_cap: 0, ..ScanOptions::default() };
    let whole = count_points(&b6, p, &opts)?.matched;
    let rows: Vec<(u64, u64)> = targets
        .par_iter()
        .map(|t| {
            let fiber = probe.fiber(t)?.fiber_count;
            let h = g4_pairing_hyperplane(t, p);
            let direct = if h.is_zero() {
                whole
            } else {
                let mut cut = b6.clone();
                cut.generators.push(h);
                count_points(&cut, p, &opts)?.matched
            };
            Ok((fiber, direct))
        })
        .collect::<Result<_>>()?;
    let mut out = G4PlaneComparison {
        prime: p.get(),
        points: targets.len() as u64,
        agreements: 0,
        first_disagreement: None,
        fiber_counts: BTreeMap::new(),
    };
    for (t, &(fiber, direct)) in targets.iter().zip(&rows) {
        *out.fiber_counts.entry(fiber).or_insert(0) += 1;
        if fiber == direct {
            out.agreements += 1;
        } else if out.first_disagreement.is_none() {
            out.first_disagreement = Some((t.clone(), fiber, direct));
        }
    }
    Ok(out)
}

/// Fiber counts at the first `limit` rational points of the case off its contained planes.
pub fn off_plane_fibers(case: FiberCase, p: SmallPrime, limit: usize) -> Result<BTreeMap<u64, u64>> {
    let spec = build_case(case.target());
    let probe = FiberProbe::new(case, p)?;
    let sys = ModSystem::new(&spec.generators, p, spec.vars.len());
    let plane_rows: Vec<ModSystem> =
        spec.planes.iter().filter(|pl| pl.contained).map(|pl| ModSystem::new(&pl.forms, p, spec.vars.len())).collect();
    let plan = ScanPlan::new(spec.ambient_dim, p, DEFAULT_CHUNKS)?;
    let targets = scan(&plan, limit, |t| sys.vanishes(t) && !plane_rows.iter().any(|r| r.vanishes(t))).sample;
    let counts: Vec<u64> =
        targets.par_iter().map(|t| Ok(probe.fiber(t)?.fiber_count)).collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for c in counts {
        *out.entry(c).or_insert(0) += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> SmallPrime {
        SmallPrime::new(n).unwrap()
    }

    #[test]
    fn pair_index_matches_catalog_order() {
        for n in 2..=6 {
            for (k, (i, j)) in plucker_pairs(n).into_iter().enumerate() {
                assert_eq!(pair_index(n, i, j), k);
            }
        }
    }

    #[test]
    fn recovers_coordinate_planes() {
        let q = p(3);
        let mut v = vec![0; 6];
        v[0] = 1;
        assert_eq!(subspace_from_plucker(&v, 4, q).unwrap(), [vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        v[1] = 1; // e1^e2 + e1^e3
        assert_eq!(subspace_from_plucker(&v, 4, q).unwrap(), [vec![1, 0, 0, 0], vec![0, 1, 1, 0]]);
        let bad = vec![1, 0, 0, 0, 0, 1]; // e1^e2 + e3^e4
        assert!(matches!(subspace_from_plucker(&bad, 4, q), Err(Error::NotDecomposable(_))));
    }

    #[test]
    fn wedge_of_recovered_basis_is_proportional() {
        let q = p(5);
        for [a, b] in two_subspaces(4, q).into_iter().step_by(7) {
            let v = wedge(&a, &b, q);
            let [u, w] = subspace_from_plucker(&v, 4, q).unwrap();
            let back = wedge(&u, &w, q);
            assert!(rank_le(&[&v, &back], 1, q));
        }
    }

    #[test]
    fn two_subspace_count_is_gaussian_binomial() {
        assert_eq!(two_subspaces(4, p(2)).len(), 35);
        assert_eq!(two_subspaces(5, p(3)).len(), 1210);
    }

    #[test]
    fn criterion_examples() {
        let q = p(2);
        let e = |k: usize| (0..6).map(|j| u64::from(j == k)).collect::<Vec<u64>>();
        // x = 0, y = e2^e3 in V' coordinates (first pair)
        assert_eq!(linalg_equiv_check(&[0, 0, 0, 0], &e(0), &[e(0)], q).unwrap(), (true, true));
        // x = e4 (third basis vector of V'), y = 0, U = <e2^e3>
        assert_eq!(linalg_equiv_check(&[0, 0, 1, 0], &[0; 6], &[e(0)], q).unwrap(), (true, false));
        assert!(linalg_equiv_check(&[0, 0, 0], &[0, 0, 0], &[], q).is_err());
    }

    #[test]
    fn g5_fiber_over_a_point_off_the_plane() {
        let q = p(2);
        let probe = FiberProbe::new(FiberCase::G5, q).unwrap();
        let mut t = vec![0u64; 16];
        t[0] = 1;
        t[5] = 1; // y12
        let r = probe.fiber(&t).unwrap();
        assert_eq!((r.fiber_count, r.shape), (1, Shape::Point));
    }
}
