//! Catalog dumps against committed copies. `UPDATE_GOLDEN=1` rewrites them.

use std::path::PathBuf;

use keyvariety_core::catalog::{build_case, CaseId};

fn golden_path(case: CaseId) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{}.txt", case.as_str()))
}

#[test]
fn catalog_dumps_are_stable() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for case in CaseId::ALL {
        let dump = build_case(case).dump();
        let path = golden_path(case);
        if update {
            std::fs::write(&path, &dump).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(dump, want, "{} drifted from its golden dump", case.as_str());
    }
}
