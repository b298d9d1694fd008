mod common;

use common::p;
use keyvariety_core::catalog::{build_case, rank_locus, CaseId};
use keyvariety_core::invariants::{singular_scan, ScanOptions};

#[test]
fn singular_points_are_the_rank_locus() {
    for case in [CaseId::G4SigmaBar, CaseId::G5SigmaBar, CaseId::G6qSigmaBar] {
        let locus = rank_locus(case).unwrap();
        for q in [2, 3] {
            let r = singular_scan(&build_case(case), Some(&locus), p(q), &ScanOptions::default()).unwrap();
            assert!(r.sets_equal, "{} F_{q}: {r:?}", case.as_str());
            assert!(r.symmetric_difference_sample.is_empty());
            assert!(r.jacobian_singular > 0);
        }
    }
}

#[test]
fn genus_six_quadric_singular_along_dual_plane() {
    let locus = rank_locus(CaseId::G6qSigmaBar).unwrap();
    for q in [2u64, 3] {
        let r = singular_scan(&build_case(CaseId::G6qSigmaBar), Some(&locus), p(q), &ScanOptions::default()).unwrap();
        assert_eq!(r.singular_on_planes["u5dual"], (q.pow(5) - 1) / (q - 1));
    }
}

#[test]
fn genus_six_cubic_singular_points_have_zero_y_block() {
    let spec = build_case(CaseId::G6cSigmaBar);
    assert!(rank_locus(CaseId::G6cSigmaBar).is_none());
    let y: Vec<usize> = spec.vars.iter().enumerate().filter(|(_, v)| v.starts_with('y')).map(|(i, _)| i).collect();
    assert_eq!(y.len(), 5);
    for q in [2, 3] {
        let opts = ScanOptions { sample_cap: usize::MAX, ..ScanOptions::default() };
        let r = singular_scan(&spec, None, p(q), &opts).unwrap();
        assert_eq!(r.jacobian_singular_sample.len() as u64, r.jacobian_singular);
        assert!(r.jacobian_singular > 0);
        for pt in &r.jacobian_singular_sample {
            assert!(y.iter().all(|&i| pt[i] == 0), "{pt:?}");
        }
    }
}

#[test]
fn smooth_auxiliary_varieties() {
    for case in [CaseId::Grass25, CaseId::Grass26, CaseId::B5, CaseId::B6, CaseId::Q3G6q] {
        for q in [2, 3] {
            let r = singular_scan(&build_case(case), None, p(q), &ScanOptions::default()).unwrap();
            assert_eq!(r.jacobian_singular, 0, "{} F_{q}", case.as_str());
        }
    }
}
