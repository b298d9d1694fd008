//! Independent oracles. Nothing here calls the scanning or incidence code under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use keyvariety_core::algebra::SmallPrime;

pub fn p(n: u64) -> SmallPrime {
    SmallPrime::new(n).unwrap()
}

/// All vectors of `F_q^n`, counting in base `q`.
pub fn all_vectors(n: usize, q: u64) -> Vec<Vec<u64>> {
    (0..q.pow(n as u32))
        .map(|mut c| {
            (0..n)
                .map(|_| {
                    let d = c % q;
                    c /= q;
                    d
                })
                .collect()
        })
        .collect()
}

/// Scales so the first nonzero entry is 1.
pub fn normalize(v: &mut [u64], q: u64) -> bool {
    let Some(&lead) = v.iter().find(|&&c| c != 0) else { return false };
    let inv = (1..q).find(|i| i * lead % q == 1).unwrap();
    v.iter_mut().for_each(|c| *c = *c * inv % q);
    true
}

/// Projective points of `P^{n-1}(F_q)`, normalized.
pub fn proj_points(n: usize, q: u64) -> Vec<Vec<u64>> {
    all_vectors(n, q)
        .into_iter()
        .filter_map(|mut v| normalize(&mut v, q).then_some(v))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Plücker vectors `u ^ w` (pairs `i < j` in lex order) of every pair of independent
/// vectors, collected as normalized points: the rational points of G(2, n).
pub fn grassmannian_oracle(n: usize, q: u64) -> BTreeSet<Vec<u64>> {
    let vs = all_vectors(n, q);
    let mut out = BTreeSet::new();
    for u in &vs {
        for w in &vs {
            let mut pl: Vec<u64> = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    pl.push((u[i] * w[j] + q * q - u[j] * w[i] % q) % q);
                }
            }
            if normalize(&mut pl, q) {
                out.insert(pl);
            }
        }
    }
    out
}

/// `[n, 2]_q` from ordered bases: `(q^n - 1)(q^n - q) / ((q^2 - 1)(q^2 - q))`.
pub fn gaussian_two(n: u32, q: u64) -> u64 {
    (q.pow(n) - 1) * (q.pow(n) - q) / ((q * q - 1) * (q * q - q))
}

/// Degree of a projective variety from its Hilbert function values `h(0..=dim)`:
/// the `dim`-th finite difference of the Hilbert polynomial.
pub fn degree_from_hilbert(h: &[i128], dim: usize) -> i128 {
    let mut d = h.to_vec();
    for _ in 0..dim {
        d = d.windows(2).map(|w| w[1] - w[0]).collect();
    }
    d[0]
}

fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Hilbert function of a complete intersection of the given degrees in `P^n`,
/// from `prod (1 - t^d) / (1 - t)^(n+1)`.
pub fn ci_hilbert(n: usize, degrees: &[usize], k: usize) -> i128 {
    let mut num = vec![0i128; 1];
    num[0] = 1;
    for &d in degrees {
        let mut next = vec![0i128; num.len() + d];
        for (i, &c) in num.iter().enumerate() {
            next[i] += c;
            next[i + d] -= c;
        }
        num = next;
    }
    num.iter().enumerate().filter(|(i, _)| *i <= k).map(|(i, &c)| c * binom((k - i) as i128 + n as i128, n as i128)).sum()
}

/// Hilbert function of G(2, n) in degree `k`: semistandard tableaux of shape `(k, k)`
/// with entries in `1..=n`, i.e. `k` columns `a < b` weakly increasing in both rows.
pub fn grassmann_hilbert(n: usize, k: usize) -> i128 {
    // state: last column (a, b)
    let cols: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    if k == 0 {
        return 1;
    }
    let mut ways: Vec<i128> = vec![1; cols.len()];
    for _ in 1..k {
        ways = cols
            .iter()
            .map(|&(a, b)| {
                cols.iter().zip(&ways).filter(|(&(c, d), _)| c <= a && d <= b).map(|(_, &w)| w).sum()
            })
            .collect();
    }
    ways.iter().sum()
}

/// 4x4 Pfaffian of the principal submatrix on indices `i`.
fn pf4(m: &[[i64; 5]; 5], i: [usize; 4]) -> i64 {
    let [a, b, c, d] = i;
    m[a][b] * m[c][d] - m[a][c] * m[b][d] + m[a][d] * m[b][c]
}

/// Kernel of a 5x5 skew matrix of rank 4 via signed sub-Pfaffians.
pub fn pfaffian_kernel(m: &[[i64; 5]; 5]) -> [i64; 5] {
    let mut v = [0i64; 5];
    for (i, slot) in v.iter_mut().enumerate() {
        let rest: Vec<usize> = (0..5).filter(|&j| j != i).collect();
        let s = if i % 2 == 0 { 1 } else { -1 };
        *slot = s * pf4(m, [rest[0], rest[1], rest[2], rest[3]]);
    }
    v
}

/// Skew matrix on `V' = <e2..e6>` of a linear form on `wedge^2 V'` given on pairs of `2..=6`.
pub fn skew_from_form(form: &[i64; 10]) -> [[i64; 5]; 5] {
    let mut m = [[0i64; 5]; 5];
    let mut k = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            m[i][j] = form[k];
            m[j][i] = -form[k];
            k += 1;
        }
    }
    m
}

/// Image of `P^2` under `lambda -> ker(sum lambda_i omega_i)`, a quadratic map to `P^4`.
pub fn veronese_oracle(forms: &[[i64; 10]; 3], q: u64) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    for l in proj_points(3, q) {
        let mut f = [0i64; 10];
        for (k, slot) in f.iter_mut().enumerate() {
            *slot = (0..3).map(|i| l[i] as i64 * forms[i][k]).sum();
        }
        let m = skew_from_form(&f);
        let v = pfaffian_kernel(&m);
        for row in &m {
            assert_eq!(row.iter().zip(&v).map(|(a, b)| a * b).sum::<i64>(), 0, "kernel sign convention");
        }
        let mut red: Vec<u64> = v.iter().map(|c| c.rem_euclid(q as i64) as u64).collect();
        if normalize(&mut red, q) {
            out.insert(red);
        }
    }
    out
}

/// Points of `B6 ∩ H_t` counted as pairs `([w], [u])` in `P^2 x P^2` with `w . u = 0`
/// and `sum m_ij w_i u_j = 0`, for a 3x3 matrix `m` over F_q.
pub fn flag_hyperplane_count(m: &[[u64; 3]; 3], q: u64) -> u64 {
    let pts = proj_points(3, q);
    let mut n = 0;
    for w in &pts {
        for u in &pts {
            let inc: u64 = (0..3).map(|i| w[i] * u[i]).sum::<u64>() % q;
            let pair: u64 = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| m[i][j] * w[i] * u[j]).sum::<u64>() % q;
            n += u64::from(inc == 0 && pair == 0);
        }
    }
    n
}

/// Rank of a matrix over F_q by plain elimination.
pub fn rank_mod(rows: &[Vec<u64>], q: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_multiple_of(q)) else { continue };
        m.swap(r, piv);
        let inv = (1..q).find(|i| i * m[r][c] % q == 1).unwrap();
        let pr: Vec<u64> = m[r].iter().map(|x| x * inv % q).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] % q != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x = (*x + q * q - f * y % q) % q;
                }
            }
        }
        m[r] = pr;
        r += 1;
    }
    r
}
