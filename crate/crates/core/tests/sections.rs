mod common;

use common::p;
use keyvariety_core::catalog::{build_case, CaseId};
use keyvariety_core::cli::{DEFAULT_PLANE_SECTION_SEED, DEFAULT_SECTION_SEED};
use keyvariety_core::invariants::ScanOptions;
use keyvariety_core::sections::{cut, parse_section_file, section_report, SectionSpec};

#[test]
fn generic_sections_are_threefolds_at_three() {
    for case in CaseId::SIGMA_BAR {
        let base = build_case(case);
        let s = SectionSpec::seeded(&base, base.expected_dim - 3, DEFAULT_SECTION_SEED, p(3), &[]).unwrap();
        let w = cut(&base, &s).unwrap();
        assert_eq!(w.expected_dim, 3);
        let r = section_report(&w, &[p(3)], None, &ScanOptions::default()).unwrap();
        assert_eq!(r.per_prime[0].floor_dim, Some(3), "{}: {:?}", case.as_str(), r);
    }
}

#[test]
fn committed_plane_seed_is_smooth_off_pi() {
    let base = build_case(CaseId::G8SigmaBar);
    for q in [2u64, 3] {
        let s = SectionSpec::seeded(&base, 2, DEFAULT_PLANE_SECTION_SEED, p(q), &["pi"]).unwrap();
        let w = cut(&base, &s).unwrap();
        let r = section_report(&w, &[p(q)], Some("pi"), &ScanOptions::default()).unwrap();
        let row = &r.per_prime[0];
        assert_eq!(row.plane_points, Some(q * q + q + 1));
        assert_eq!(row.singular_off_plane, Some(0), "F_{q}: {row:?}");
    }
}

#[test]
fn cutting_is_associative() {
    let base = build_case(CaseId::G6qSigmaBar);
    let forms = parse_section_file("x23 + z2\ny34 - x25\nz2 + z4 + y45\n", &base).unwrap();
    let all = cut(&base, &SectionSpec::pinned(forms.clone(), Vec::new())).unwrap();
    let first = cut(&base, &SectionSpec::pinned(forms[..1].to_vec(), Vec::new())).unwrap();
    let stepwise = cut(&first, &SectionSpec::pinned(forms[1..].to_vec(), Vec::new())).unwrap();
    assert_eq!(all, stepwise);
    assert_eq!(all.expected_dim, 6);
}

#[test]
fn overcut_section_is_rejected() {
    let base = build_case(CaseId::G8SigmaBar);
    let many: Vec<_> = (0..6).map(|i| keyvariety_core::algebra::Polynomial::var(&base.vars, i)).collect();
    assert!(cut(&base, &SectionSpec::pinned(many, Vec::new())).is_err());
}

#[test]
fn section_without_rational_points_is_empty() {
    let base = build_case(CaseId::G6cAC);
    let s = SectionSpec::seeded(&base, base.expected_dim, 1, p(2), &[]).unwrap();
    let w = cut(&base, &s).unwrap();
    let r = section_report(&w, &[p(2)], None, &ScanOptions::default()).unwrap();
    assert!(r.empty);
    assert_eq!((r.per_prime[0].count, r.per_prime[0].floor_dim), (0, None));
}
