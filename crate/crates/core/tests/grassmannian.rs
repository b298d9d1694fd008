mod common;

use std::collections::BTreeSet;

use common::{gaussian_two, grassmannian_oracle, p};
use keyvariety_core::catalog::{build_case, CaseId};
use keyvariety_core::invariants::{count_points, gaussian_binomial, ScanOptions};

fn scanned(case: CaseId, q: u64) -> BTreeSet<Vec<u64>> {
    let opts = ScanOptions { sample_cap: usize::MAX, ..ScanOptions::default() };
    let r = count_points(&build_case(case), p(q), &opts).unwrap();
    assert_eq!(r.sample.len() as u64, r.matched);
    r.sample.into_iter().collect()
}

#[test]
fn grassmannian_point_sets_match_subspace_enumeration() {
    for (case, n, q, expected) in
        [(CaseId::Grass25, 5, 2, 155), (CaseId::Grass25, 5, 3, 1210), (CaseId::Grass26, 6, 2, 651)]
    {
        let oracle = grassmannian_oracle(n, q);
        assert_eq!(oracle.len() as u64, expected);
        assert_eq!(gaussian_two(n as u32, q), expected);
        assert_eq!(scanned(case, q), oracle, "{} over F_{q}", case.as_str());
    }
}

#[test]
fn gaussian_binomial_matches_basis_count() {
    for n in 2..=8 {
        for q in [2, 3, 5, 7] {
            assert_eq!(gaussian_binomial(n, 2, q), gaussian_two(n, q), "[{n},2]_{q}");
        }
    }
    assert_eq!(gaussian_binomial(4, 1, 2), 15);
    assert_eq!(gaussian_binomial(3, 4, 2), 0);
}
