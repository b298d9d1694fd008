//! Pinned coordinates of the genus-8 case.
//!
//! `V = <e1> + V'` with `V' = <e2..e6>`. The linear hull is
//! `U^12 = e1 ^ V'  +  U^7`, where `U^7 ⊂ wedge^2 V'` is the common kernel of
//! three fixed integral forms. Each form has coefficient 1 on exactly one
//! coordinate (p25, p45, p46), so those three are eliminated and the remaining
//! seven Plücker coordinates of `wedge^2 V'` are free.

use std::sync::Arc;

use itertools::Itertools;

use super::cases::{plucker_ideal, plucker_pairs};
use super::{names, ring_of};
use crate::algebra::{Polynomial, SmallPrime};

/// Index pairs of `wedge^2 V'`, `2 <= i < j <= 6`, lexicographic.
pub fn wedge_pairs() -> Vec<(usize, usize)> {
    (2..=6).tuple_combinations().collect()
}

/// Free coordinates of `U^7`, in catalog order.
pub const U7_FREE_NAMES: [&str; 7] = ["y23", "y24", "y26", "y34", "y35", "y36", "y56"];

/// Positions of the free coordinates inside [`wedge_pairs`].
pub const U7_FREE_SLOTS: [usize; 7] = [0, 1, 3, 4, 5, 6, 9];

/// The three forms cutting out `U^7`, over [`wedge_pairs`] order
/// (23, 24, 25, 26, 34, 35, 36, 45, 46, 56).
pub const U7_FORMS: [[i64; 10]; 3] = [
    [2, 0, 0, 0, -2, -1, 1, 0, 1, -2],
    [-2, 2, 0, -1, 0, 1, 1, 1, 0, 0],
    [-2, -2, 1, -1, -1, -1, -1, 0, 0, 1],
];

/// Slot eliminated by each form (its unit coefficient): p46, p45, p25.
pub const U7_ELIMINATED_SLOTS: [usize; 3] = [8, 7, 2];

/// Integer images of all ten coordinates of `wedge^2 V'` in terms of the seven free ones.
pub fn u7_parametrization() -> [[i64; 7]; 10] {
    let mut out = [[0i64; 7]; 10];
    for (k, &slot) in U7_FREE_SLOTS.iter().enumerate() {
        out[slot][k] = 1;
    }
    for (form, &slot) in U7_FORMS.iter().zip(&U7_ELIMINATED_SLOTS) {
        debug_assert_eq!(form[slot], 1);
        for (k, &free) in U7_FREE_SLOTS.iter().enumerate() {
            out[slot][k] = -form[free];
        }
    }
    out
}

/// Expands free coordinates `s7` to the full Plücker vector of `wedge^2 V'` mod p.
pub fn full_bivector(s7: &[u64], p: SmallPrime) -> [u64; 10] {
    let param = u7_parametrization();
    let mut out = [0u64; 10];
    for (slot, row) in param.iter().enumerate() {
        out[slot] = row
            .iter()
            .zip(s7)
            .fold(0, |acc, (&c, &v)| p.add(acc, p.mul(p.reduce_i64(c), v)));
    }
    out
}

/// Ring of the genus-8 extended mid point: `x2..x6` (the `e1 ^ e_j` coordinates), then `U^7`.
pub fn sigma_ring() -> Arc<Vec<String>> {
    let mut v = names("x", 2..=6);
    v.extend(U7_FREE_NAMES.iter().map(|s| s.to_string()));
    ring_of(&v)
}

/// Ring of `B5`: the free coordinates of `U^7`.
pub fn b5_ring() -> Arc<Vec<String>> {
    ring_of(&U7_FREE_NAMES.iter().map(|s| s.to_string()).collect::<Vec<_>>())
}

fn wedge_images(vars: &Arc<Vec<String>>, offset: usize) -> Vec<Polynomial> {
    u7_parametrization()
        .iter()
        .map(|row| {
            let mut coeffs = vec![0i64; vars.len()];
            coeffs[offset..offset + 7].copy_from_slice(row);
            Polynomial::linear(vars, &coeffs)
        })
        .collect()
}

/// The 15 Plücker quadrics of G(2,6) restricted to `U^12`.
pub fn sigma_generators(vars: &Arc<Vec<String>>) -> Vec<Polynomial> {
    let wedge = wedge_images(vars, 5);
    let images: Vec<Polynomial> = plucker_pairs(6)
        .into_iter()
        .map(|(i, j)| {
            if i == 1 {
                Polynomial::var(vars, j - 2)
            } else {
                let k = wedge_pairs().iter().position(|&pr| pr == (i, j)).unwrap();
                wedge[k].clone()
            }
        })
        .collect();
    plucker_ideal(6).unwrap().iter().map(|f| f.substitute(&images)).collect()
}

/// The 5 Plücker quadrics of G(2,V') restricted to `U^7`; index `k` of G(2,5) is `e_{k+1}`.
pub fn b5_generators(vars: &Arc<Vec<String>>) -> Vec<Polynomial> {
    let wedge = wedge_images(vars, 0);
    let images: Vec<Polynomial> = plucker_pairs(5)
        .into_iter()
        .map(|(i, j)| {
            let k = wedge_pairs().iter().position(|&pr| pr == (i + 1, j + 1)).unwrap();
            wedge[k].clone()
        })
        .collect();
    plucker_ideal(5).unwrap().iter().map(|f| f.substitute(&images)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parametrization_lies_in_kernel() {
        let param = u7_parametrization();
        for form in U7_FORMS {
            for k in 0..7 {
                let v: i64 = (0..10).map(|slot| form[slot] * param[slot][k]).sum();
                assert_eq!(v, 0);
            }
        }
    }

    #[test]
    fn eliminated_coordinates() {
        let p = SmallPrime::new(101).unwrap();
        // y23 = 1 only: p46 = -2, p45 = 2, p25 = 2
        let v = full_bivector(&[1, 0, 0, 0, 0, 0, 0], p);
        assert_eq!((v[8], v[7], v[2]), (99, 2, 2));
    }

    #[test]
    fn generator_shapes() {
        let r = sigma_ring();
        let g = sigma_generators(&r);
        assert_eq!(g.len(), 15);
        assert!(g.iter().all(|f| f.total_degree() == Some(2)));
        assert_eq!(b5_generators(&b5_ring()).len(), 5);
    }
}
