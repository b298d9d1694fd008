use keyvariety_core::numerology::{
    bundle_anticanonical, case_table_check, normal_bundle_ledger, parse_ledger, primitivity_check,
    shipped_ledger, verify_ledger, SHIPPED_LEDGER, FAMILIES,
};

#[test]
fn every_shipped_identity_verifies() {
    let out = verify_ledger(&shipped_ledger(), None).unwrap();
    let names: Vec<String> = out.iter().map(|s| format!("{}/{}", s.case, s.name)).collect();
    for required in [
        "g5/exceptional-center",
        "g8/exceptional-center",
        "g4/anticanonical-join",
        "g6q/anticanonical-join",
        "g6c/anticanonical-join",
        "g4/exceptional-classes",
        "g4/discrepancy",
        "g6q/discrepancy",
        "g6c/discrepancy",
        "g8/index",
        "g5/index",
        "g4/two-ray",
    ] {
        assert!(names.iter().any(|n| n == required), "missing {required}");
    }
    for s in &out {
        assert!(s.holds(), "{s:?}");
        assert!(s.degenerate.is_empty());
        assert!(!s.entries.is_empty());
    }
}

#[test]
fn indices_per_family() {
    let text = SHIPPED_LEDGER;
    for (fam, r) in [("g4", 9), ("g6q", 7), ("g6c", 6), ("g8", 3), ("g5", 10)] {
        assert_eq!(case_table_check(fam).unwrap().fano_index_r, r);
        if fam != "g6c" {
            assert_eq!(bundle_anticanonical(fam).unwrap().index, Some(r));
        }
        assert!(text.contains(&format!("{r} M")), "{fam} index {r} missing from ledger anchors");
    }
}

#[test]
fn normal_bundles_and_primitivity() {
    for f in FAMILIES {
        let facts = normal_bundle_ledger(f).unwrap();
        assert!(facts.iter().all(|x| x.holds && x.degree == -2), "{f}");
        assert!(primitivity_check(f).unwrap().holds());
        assert!(case_table_check(f).unwrap().holds());
    }
}

#[test]
fn a_perturbed_claim_fails() {
    let broken = SHIPPED_LEDGER.replace("claim: Epp1 + Epp2 == 3*LB", "claim: Epp1 + Epp2 == 2*LB");
    assert_ne!(broken, SHIPPED_LEDGER);
    let out = verify_ledger(&parse_ledger(&broken).unwrap(), Some("g4")).unwrap();
    let two_ray = out.iter().find(|s| s.name == "two-ray").unwrap();
    assert!(!two_ray.holds());
}
