mod common;

use common::{ci_hilbert, degree_from_hilbert, grassmann_hilbert};
use keyvariety_core::invariants::{ci_degree, count_syt_two_rows, grassmann_degree, hook_length_two_rows};

#[test]
fn degree_is_twice_genus_minus_two() {
    // genus 4: (2,3) in P^4; genus 5: (2,2,2) in P^5; genus 6 and 8 from Grassmannians
    assert_eq!(ci_degree(&[2, 3]), 6);
    assert_eq!(ci_degree(&[2, 2, 2]), 8);
    assert_eq!(2 * grassmann_degree(5).unwrap(), 10);
    assert_eq!(grassmann_degree(6).unwrap(), 14);
    for (g, d) in [(4, 6), (5, 8), (6, 10), (8, 14)] {
        assert_eq!(2 * g - 2, d);
    }
}

#[test]
fn complete_intersection_degrees_match_hilbert_series() {
    for (n, degs) in [(4usize, vec![2usize, 3]), (5, vec![2, 2, 2]), (6, vec![2, 2, 3]), (3, vec![4])] {
        let dim = n - degs.len();
        let h: Vec<i128> = (0..=dim + 6).map(|k| ci_hilbert(n, &degs, k + 10)).collect();
        let degs32: Vec<u32> = degs.iter().map(|&d| d as u32).collect();
        assert_eq!(degree_from_hilbert(&h, dim) as u64, ci_degree(&degs32), "{degs:?} in P^{n}");
    }
}

#[test]
fn grassmannian_degree_matches_standard_monomials() {
    for n in 4..=7 {
        let dim = 2 * (n - 2);
        let h: Vec<i128> = (0..=dim).map(|k| grassmann_hilbert(n, k + 3)).collect();
        assert_eq!(degree_from_hilbert(&h, dim) as u64, grassmann_degree(n).unwrap(), "G(2,{n})");
    }
    assert!(grassmann_degree(3).is_err());
}

#[test]
fn tableaux_agree_with_hook_lengths() {
    for k in 0..=12 {
        assert_eq!(count_syt_two_rows(k), hook_length_two_rows(k), "2 x {k}");
    }
    assert_eq!(count_syt_two_rows(3), 5);
    assert_eq!(count_syt_two_rows(4), 14);
}
