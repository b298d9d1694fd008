//! Rank-condition descriptions of singular loci, decided by matrix rank mod p.

use super::{build_case, CaseId};
use crate::algebra::{format_point, matrix_rank_mod_p, ModSystem, Polynomial, SmallPrime};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankRule {
    /// `x = 0` and `rank[y; M^T y] <= 1`, or `y = 0` and `rank[x; M x] <= 1`.
    G4,
    /// `x = 0` and `rank M_y <= 2`.
    G5,
    /// `x = 0` and `M_Q(z) y = 0`.
    G6Q,
}

#[derive(Clone, Debug)]
pub struct RankLocusSpec {
    pub case_id: CaseId,
    pub rule: RankRule,
    pub description: &'static str,
    pub generators: Vec<Polynomial>,
}

/// The rank locus claimed to equal the singular locus; `None` where no description exists (g6c).
pub fn rank_locus(case: CaseId) -> Option<RankLocusSpec> {
    let (rule, description) = match case {
        CaseId::G4SigmaBar => (
            RankRule::G4,
            "{x=0, rank[y; M^T y] <= 1} or {y=0, rank[x; M x] <= 1}",
        ),
        CaseId::G5SigmaBar => (RankRule::G5, "{x=0, rank M_y <= 2}"),
        CaseId::G6qSigmaBar => (RankRule::G6Q, "{x=0, M_Q(z) y = 0}"),
        _ => return None,
    };
    Some(RankLocusSpec { case_id: case, rule, description, generators: build_case(case).generators })
}

/// The traceless 3x3 matrix of the genus-4 cubic from coordinates `z11..z32`.
pub fn g4_matrix(z: &[u64], p: SmallPrime) -> [[u64; 3]; 3] {
    let z33 = p.neg(p.add(z[0], z[4]));
    [[z[0], z[1], z[2]], [z[3], z[4], z[5]], [z[6], z[7], z33]]
}

/// The skew 5x5 matrix `M_Q(z)`, quadratic in `z = (z2, z3, z4, z5)`.
pub fn m_q(z: &[u64], p: SmallPrime) -> [[u64; 5]; 5] {
    let (z2, z3, z4, z5) = (z[0], z[1], z[2], z[3]);
    let m = |a, b| p.mul(a, b);
    let upper = [
        [0, m(z2, z2), m(z3, z3), m(z2, z3), p.sub(m(z2, z4), m(z3, z5))],
        [0, 0, p.add(m(z3, z5), m(z2, z4)), m(z2, z5), p.neg(m(z5, z5))],
        [0, 0, 0, p.neg(m(z3, z4)), p.neg(m(z4, z4))],
        [0, 0, 0, 0, p.neg(m(z4, z5))],
        [0; 5],
    ];
    let mut out = [[0u64; 5]; 5];
    for i in 0..5 {
        for j in i + 1..5 {
            out[i][j] = upper[i][j];
            out[j][i] = p.neg(upper[i][j]);
        }
    }
    out
}

fn all_zero(v: &[u64]) -> bool {
    v.iter().all(|&c| c == 0)
}

fn rank_rows(rows: &[&[u64]], p: SmallPrime) -> usize {
    matrix_rank_mod_p(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), p)
}

fn mat_vec<const N: usize>(m: &[[u64; N]; N], v: &[u64], p: SmallPrime, transpose: bool) -> Vec<u64> {
    (0..N)
        .map(|i| {
            (0..N).fold(0, |acc, j| {
                let e = if transpose { m[j][i] } else { m[i][j] };
                p.add(acc, p.mul(e, v[j]))
            })
        })
        .collect()
}

impl RankLocusSpec {
    /// Membership for a point already known to lie on the variety.
    pub fn member_unchecked(&self, pt: &[u64], p: SmallPrime) -> bool {
        match self.rule {
            RankRule::G4 => {
                let (y, x) = (&pt[0..3], &pt[3..6]);
                let m = g4_matrix(&pt[6..14], p);
                (all_zero(x) && rank_rows(&[y, &mat_vec(&m, y, p, true)], p) <= 1)
                    || (all_zero(y) && rank_rows(&[x, &mat_vec(&m, x, p, false)], p) <= 1)
            }
            RankRule::G5 => {
                let rows: Vec<&[u64]> = (0..3).map(|i| &pt[4 + 4 * i..8 + 4 * i]).collect();
                all_zero(&pt[0..4]) && rank_rows(&rows, p) <= 2
            }
            RankRule::G6Q => {
                all_zero(&pt[4..9]) && all_zero(&mat_vec(&m_q(&pt[0..4], p), &pt[9..14], p, false))
            }
        }
    }
}

/// Whether an on-variety point satisfies the rank description.
pub fn rank_locus_member(spec: &RankLocusSpec, pt: &[u64], p: SmallPrime) -> Result<bool> {
    let arity = spec.generators[0].arity();
    let sys = ModSystem::new(&spec.generators, p, arity);
    if pt.len() != arity {
        return Err(Error::Arity { expected: arity, got: pt.len() });
    }
    if !sys.vanishes(pt) {
        return Err(Error::PointOffVariety(format_point(pt)));
    }
    Ok(spec.member_unchecked(pt, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_q_rank_at_first_basis_vector() {
        let p = SmallPrime::new(3).unwrap();
        let m: Vec<Vec<u64>> = m_q(&[1, 0, 0, 0], p).iter().map(|r| r.to_vec()).collect();
        assert_eq!(matrix_rank_mod_p(&m, p), 2);
    }

    #[test]
    fn g5_membership() {
        let p = SmallPrime::new(2).unwrap();
        let spec = rank_locus(CaseId::G5SigmaBar).unwrap();
        let mut pt = vec![0u64; 16];
        // rows e1, e2, 0: rank 2
        pt[4] = 1;
        pt[9] = 1;
        assert!(rank_locus_member(&spec, &pt, p).unwrap());
        pt[14] = 1; // third row e3: rank 3
        assert!(!rank_locus_member(&spec, &pt, p).unwrap());
        let mut off = vec![0u64; 16];
        off[0] = 1; // x = e1, M_y = 0
        assert!(!rank_locus_member(&spec, &off, p).unwrap());
        off[4] = 1; // y11 x1 != 0
        assert!(rank_locus_member(&spec, &off, p).is_err());
    }

    #[test]
    fn g6q_cone_vertex_plane_is_in_locus() {
        let p = SmallPrime::new(3).unwrap();
        let spec = rank_locus(CaseId::G6qSigmaBar).unwrap();
        let mut pt = vec![0u64; 14];
        pt[9..14].copy_from_slice(&[1, 2, 0, 1, 1]);
        assert!(rank_locus_member(&spec, &pt, p).unwrap());
    }

    #[test]
    fn no_locus_for_c_type() {
        assert!(rank_locus(CaseId::G6cSigmaBar).is_none());
    }
}
