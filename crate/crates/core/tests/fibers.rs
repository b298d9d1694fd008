mod common;

use std::collections::BTreeSet;

use common::{flag_hyperplane_count, p, proj_points, rank_mod, veronese_oracle};
use keyvariety_core::catalog::g8::U7_FORMS;
use keyvariety_core::catalog::{build_case, g4_matrix, CaseId};
use keyvariety_core::incidence::{
    fiber_over, g4_plane_comparison, g5_rank_tally, g8_plane_tally, off_plane_fibers, FiberCase, FiberProbe,
    Shape,
};

#[test]
fn genus_five_fibers_follow_rank() {
    let q = 2u64;
    let probe = FiberProbe::new(FiberCase::G5, p(q)).unwrap();
    let spec = build_case(CaseId::G5SigmaBar);
    assert_eq!(spec.vars.len(), 16);
    let mut seen = BTreeSet::new();
    // every y in P^11 with x = 0 lies on the variety
    for y in proj_points(12, q) {
        let mut t = vec![0; 4];
        t.extend(&y);
        let rows: Vec<Vec<u64>> = y.chunks(4).map(<[u64]>::to_vec).collect();
        let rank = rank_mod(&rows, q);
        let r = probe.fiber(&t).unwrap();
        // fiber is P(ker M_y) in P^3
        let expected = (q.pow(4 - rank as u32) - 1) / (q - 1);
        assert_eq!(r.fiber_count, expected, "{t:?}");
        let shape = match rank {
            3 => Shape::Point,
            2 => Shape::P1,
            _ => Shape::P2,
        };
        assert_eq!(r.shape, shape);
        seen.insert(rank);
    }
    assert_eq!(seen, BTreeSet::from([1, 2, 3]));
    let t = g5_rank_tally(p(q)).unwrap();
    assert_eq!(t.points, 4095);
    assert_eq!(t.tally.keys().copied().collect::<Vec<_>>(), vec![(1, 7), (2, 3), (3, 1)]);
}

#[test]
fn genus_five_fiber_off_plane_is_a_point() {
    // x = e1, M_y with rows annihilating e1
    let mut t = vec![1, 0, 0, 0];
    t.extend([0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]);
    let r = fiber_over(FiberCase::G5, &t, p(3)).unwrap();
    assert_eq!(r.fiber_count, 1);
    assert_eq!(r.fiber_points, vec![vec![1, 0, 0, 0]]);
}

#[test]
fn genus_eight_jumping_locus_is_projected_veronese() {
    for q in [2u64, 3] {
        let (t, jumping) = g8_plane_tally(p(q)).unwrap();
        let counts: BTreeSet<u64> = t.tally.keys().map(|&(_, c)| c).collect();
        assert_eq!(counts, BTreeSet::from([1, q + 1]), "F_{q}");
        let oracle = veronese_oracle(&U7_FORMS, q);
        assert_eq!(oracle.len() as u64, q * q + q + 1);
        let found: BTreeSet<Vec<u64>> = jumping.into_iter().collect();
        assert_eq!(found, oracle, "F_{q}");
    }
}

#[test]
fn genus_four_fibers_over_plane_intersection() {
    let q = 2;
    let probe = FiberProbe::new(FiberCase::G4, p(q)).unwrap();
    let mut checked = 0;
    for z in proj_points(8, q) {
        let mut t = vec![0; 6];
        t.extend(&z);
        let Ok(r) = probe.fiber(&t) else { continue };
        let m = g4_matrix(&z, p(q));
        assert_eq!(r.fiber_count, flag_hyperplane_count(&m, q), "{t:?}");
        checked += 1;
    }
    assert_eq!(checked, 255);
    let c = g4_plane_comparison(p(q)).unwrap();
    assert_eq!((c.points, c.agreements), (255, 255));
}

#[test]
fn fibers_off_planes_are_points() {
    for case in [FiberCase::G8, FiberCase::G4, FiberCase::G6Q, FiberCase::G5] {
        for q in [2, 3] {
            let t = off_plane_fibers(case, p(q), 40).unwrap();
            assert_eq!(t.keys().copied().collect::<Vec<_>>(), vec![1], "{case:?} F_{q}");
        }
    }
}

#[test]
fn unsupported_and_invalid_targets() {
    assert!(FiberCase::for_case(CaseId::G6cSigmaBar).is_err());
    let probe = FiberProbe::new(FiberCase::G5, p(2)).unwrap();
    assert!(probe.fiber(&[1, 0, 0]).is_err());
    // rows of M_y do not annihilate x: off the variety
    let mut off = vec![1, 0, 0, 0];
    off.extend([1; 12]);
    assert!(probe.fiber(&off).is_err());
}
