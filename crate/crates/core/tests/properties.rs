use num_bigint::BigInt;
use proptest::prelude::*;

use keyvariety_core::algebra::{parse_poly, ring, Polynomial, SmallPrime};
use keyvariety_core::catalog::{build_case, CaseId};
use keyvariety_core::enumerate::{index_of, point_at, scan, ScanPlan};
use keyvariety_core::sections::{cut, SectionSpec};

const NAMES: [&str; 4] = ["a", "b", "c", "d"];

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, 4), -5i64..=5), 0..6).prop_map(|terms| {
        let vars = ring(&NAMES);
        let mut f = Polynomial::zero(&vars);
        for (m, c) in terms {
            f.add_term(m, BigInt::from(c));
        }
        f
    })
}

fn prime() -> impl Strategy<Value = SmallPrime> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]).prop_map(|p| SmallPrime::new(p).unwrap())
}

proptest! {
    #[test]
    fn evaluation_is_a_ring_map(f in poly(), g in poly(), p in prime(), pt in prop::collection::vec(0u64..13, 4)) {
        let pt: Vec<u64> = pt.iter().map(|c| c % p.get()).collect();
        let (ef, eg) = (f.eval(&pt, p).unwrap(), g.eval(&pt, p).unwrap());
        prop_assert_eq!(f.add(&g).eval(&pt, p).unwrap(), p.add(ef, eg));
        prop_assert_eq!(f.mul(&g).eval(&pt, p).unwrap(), p.mul(ef, eg));
        prop_assert_eq!(f.sub(&f).is_zero(), true);
    }

    #[test]
    fn display_parses_back(f in poly()) {
        let vars = ring(&NAMES);
        prop_assert_eq!(parse_poly(&f.to_string(), &vars).unwrap(), f);
    }

    #[test]
    fn point_indices_round_trip(n in 1usize..5, p in prime(), seed in any::<u64>()) {
        let plan = ScanPlan::new(n, p, 1).unwrap();
        let i = seed % plan.total();
        prop_assert_eq!(index_of(&point_at(n, p, i), p), i);
    }

    #[test]
    fn scans_do_not_depend_on_chunking(f in poly(), p in prop::sample::select(vec![2u64, 3, 5]), chunks in 1usize..40) {
        let p = SmallPrime::new(p).unwrap();
        let pred = |pt: &[u64]| f.eval(pt, p).unwrap() == 0;
        let one = scan(&ScanPlan::new(3, p, 1).unwrap(), 5, pred);
        let many = scan(&ScanPlan::new(3, p, chunks).unwrap(), 5, pred);
        prop_assert_eq!(one, many);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cutting_composes(seed in any::<u64>(), split in 0usize..=4) {
        let base = build_case(CaseId::G6qSigmaBar);
        let p = SmallPrime::new(3).unwrap();
        let s = SectionSpec::seeded(&base, 4, seed, p, &[]).unwrap();
        // independent mod p, hence over Q, so every cut below succeeds
        let all = cut(&base, &s).unwrap();
        let (a, b) = s.linear_forms.split_at(split);
        let first = cut(&base, &SectionSpec::pinned(a.to_vec(), Vec::new())).unwrap();
        let both = cut(&first, &SectionSpec::pinned(b.to_vec(), Vec::new())).unwrap();
        prop_assert_eq!(all, both);
    }
}
