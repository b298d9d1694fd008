mod common;

use common::p;
use keyvariety_core::catalog::{build_case, CaseId};
use keyvariety_core::invariants::{estimate_dimension, ScanOptions};

#[test]
fn mid_point_dimensions_from_point_counts() {
    let primes = [p(2), p(3)];
    let opts = ScanOptions { sample_cap: 0, ..ScanOptions::default() };
    for (case, dim) in [
        (CaseId::G4SigmaBar, 11),
        (CaseId::G5SigmaBar, 12),
        (CaseId::G6qSigmaBar, 9),
        (CaseId::G6cSigmaBar, 8),
        (CaseId::G8SigmaBar, 5),
    ] {
        let est = estimate_dimension(&build_case(case), &primes, &opts).unwrap();
        assert!(est.consistent, "{}: {est:?}", case.as_str());
        assert_eq!(est.estimated_dim, Some(dim), "{}: {est:?}", case.as_str());
    }
}

#[test]
fn auxiliary_dimensions() {
    let primes = [p(2), p(3)];
    let opts = ScanOptions { sample_cap: 0, ..ScanOptions::default() };
    for case in [CaseId::Grass25, CaseId::Grass26, CaseId::B5, CaseId::B6, CaseId::Q3G6q, CaseId::G6qAQ, CaseId::G6cAC] {
        let spec = build_case(case);
        let est = estimate_dimension(&spec, &primes, &opts).unwrap();
        assert_eq!(est.estimated_dim, Some(spec.expected_dim), "{}: {est:?}", case.as_str());
    }
}
