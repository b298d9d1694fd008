use num_rational::BigRational;
use num_traits::{One, Zero};

use super::prime::SmallPrime;

/// Row-reduces `m` in place to reduced echelon form; returns pivot columns.
pub fn rref_mod_p(m: &mut [Vec<u64>], p: SmallPrime) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = p.inv(m[r][c]);
        for v in m[r].iter_mut() {
            *v = p.mul(*v, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let t = p.mul(f, m[r][j]);
                    m[i][j] = p.sub(m[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over F_p of a rectangular matrix whose entries are already reduced.
pub fn matrix_rank_mod_p(m: &[Vec<u64>], p: SmallPrime) -> usize {
    let mut work = m.to_vec();
    rank_in_place(&mut work, p)
}

/// Forward elimination only; cheaper than a full reduction when only rank matters.
pub fn rank_in_place(m: &mut [Vec<u64>], p: SmallPrime) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = p.inv(m[r][c]);
        for i in r + 1..rows {
            if m[i][c] != 0 {
                let f = p.mul(m[i][c], inv);
                for j in c..cols {
                    let t = p.mul(f, m[r][j]);
                    m[i][j] = p.sub(m[i][j], t);
                }
            }
        }
        r += 1;
    }
    r
}

/// Basis of `{v : m v = 0}` over F_p, one vector per free column.
pub fn kernel_mod_p(m: &[Vec<u64>], ncols: usize, p: SmallPrime) -> Vec<Vec<u64>> {
    let mut work: Vec<Vec<u64>> = m.to_vec();
    let pivots = rref_mod_p(&mut work, p);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; ncols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = p.neg(work[row][free]);
        }
        basis.push(v);
    }
    basis
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span_mod_p(basis: &[Vec<u64>], v: &[u64], p: SmallPrime) -> bool {
    let r0 = matrix_rank_mod_p(basis, p);
    let mut m = basis.to_vec();
    m.push(v.to_vec());
    rank_in_place(&mut m, p) == r0
}

pub fn rational_rank(m: &[Vec<BigRational>]) -> usize {
    let mut work = m.to_vec();
    rational_rref(&mut work).len()
}

pub fn rational_rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = BigRational::one() / m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rational_kernel(m: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut work = m.to_vec();
    let pivots = rational_rref(&mut work);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -work[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Inverse over Q, or `None` when singular.
pub fn rational_inverse(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    let pivots = rational_rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
