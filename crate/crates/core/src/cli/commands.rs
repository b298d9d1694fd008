//! One-shot subcommands. Each returns the text to print and an exit status.

use serde_json::{json, Value};

use crate::algebra::{format_point, parse_point, SmallPrime};
use crate::catalog::{build_case, CaseId};
use crate::error::{Error, Result};
use crate::incidence::{fiber_over, FiberCase};
use crate::invariants::{count_points, ScanOptions};
use crate::numerology::{shipped_ledger, verify_ledger};
use crate::sections::{cut, parse_section_file, section_report, SectionSpec};

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializes");
    s.push('\n');
    s
}

pub fn count_command(case: &str, prime: u64) -> Result<(String, i32)> {
    let case = CaseId::parse(case)?;
    let p = SmallPrime::new(prime)?;
    let r = count_points(&build_case(case), p, &ScanOptions { sample_cap: 0, ..ScanOptions::default() })?;
    let v = json!({ "case": case.as_str(), "prime": prime, "count": r.matched, "examined": r.total_examined });
    Ok((pretty(&v), 0))
}

pub fn fiber_command(case: &str, prime: u64, point: &str) -> Result<(String, i32)> {
    let case = CaseId::parse(case)?;
    let p = SmallPrime::new(prime)?;
    let fc = FiberCase::for_case(case)?;
    let t = parse_point(point, p)?;
    let r = fiber_over(fc, &t, p)?;
    let v = json!({
        "case": case.as_str(),
        "prime": prime,
        "target": format_point(&r.target_point),
        "fiber_count": r.fiber_count,
        "shape": r.shape.to_string(),
        "fiber_points": r.fiber_points.iter().map(|s| format_point(s)).collect::<Vec<_>>(),
    });
    Ok((pretty(&v), 0))
}

/// Family key for a case argument; ledger sections are tagged by family.
fn family_of(case: &str) -> Result<&'static str> {
    CaseId::parse(case)?.family().ok_or_else(|| Error::UnknownCase(case.to_string()))
}

pub fn ledger_command(case: Option<&str>) -> Result<(String, i32)> {
    let fam = case.map(family_of).transpose()?;
    let outcomes = verify_ledger(&shipped_ledger(), fam)?;
    let mut text = String::new();
    let mut failed = false;
    for s in &outcomes {
        let mark = if s.holds() { "PASS" } else { "FAIL" };
        failed |= !s.holds();
        text.push_str(&format!("{mark} [{}/{}] {}\n", s.case, s.name, s.anchor));
        for d in &s.degenerate {
            text.push_str(&format!("    degenerate symbol {d}\n"));
        }
        for e in &s.entries {
            let m = if e.holds { "ok " } else { "BAD" };
            text.push_str(&format!("    {m} line {}: {}  ({})\n", e.line, e.text, e.detail));
        }
    }
    text.push_str(&format!("{} sections, {} failing\n", outcomes.len(), outcomes.iter().filter(|s| !s.holds()).count()));
    Ok((text, i32::from(failed)))
}

pub fn section_command(
    case: &str,
    forms_text: &str,
    primes: &[u64],
    contains: &[String],
    track: Option<&str>,
) -> Result<(String, i32)> {
    let case = CaseId::parse(case)?;
    let base = build_case(case);
    let primes = primes.iter().map(|&p| SmallPrime::new(p)).collect::<Result<Vec<_>>>()?;
    let forms = parse_section_file(forms_text, &base)?;
    let w = cut(&base, &SectionSpec::pinned(forms, contains.to_vec()))?;
    let r = section_report(&w, &primes, track, &ScanOptions::default())?;
    let rows: Vec<Value> = r
        .per_prime
        .iter()
        .map(|row| {
            json!({
                "prime": row.prime,
                "count": row.count,
                "floor_rule": row.floor_dim,
                "log_nearest": row.log_nearest_dim,
                "singular": row.singular,
                "singular_off_plane": row.singular_off_plane,
                "plane_points": row.plane_points,
            })
        })
        .collect();
    let v = json!({
        "case": case.as_str(),
        "forms": w.generators.len() - base.generators.len(),
        "expected_dim": r.expected_dim,
        "empty": r.empty,
        "primes": rows,
    });
    Ok((pretty(&v), 0))
}
