//! Check orchestration. Checks run one after another in [`Check`] order; all
//! parallelism lives inside the scans.

use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::{json, Value};

use super::anchors as a;
use super::config::{Check, RunConfig};
use super::report::{Record, Report, Verdict};
use crate::algebra::{format_point, SmallPrime};
use crate::catalog::{build_case, change_coordinates, pinned_shear, rank_locus, CaseId};
use crate::error::Result;
use crate::incidence::{
    g4_plane_comparison, g5_rank_tally, g8_plane_tally, linalg_sweep, off_plane_fibers, FiberCase,
};
use crate::invariants::{
    ci_degree, count_points, count_syt_two_rows, estimate_dimension, gaussian_binomial,
    grassmann_degree, hook_length_two_rows, singular_scan, ScanOptions,
};
use crate::numerology::{
    bundle_anticanonical, case_table_check, normal_bundle_ledger, primitivity_check, shipped_ledger,
    verify_ledger, FAMILIES,
};
use crate::sections::{cut, section_report, SectionSpec};

/// Off-plane targets probed per case and prime.
const OFF_PLANE_TARGETS: usize = 64;
/// Tableau agreement is checked for `G(2, n)` with `n` in this range.
const TABLEAU_RANGE: std::ops::RangeInclusive<usize> = 4..=9;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

struct Ctx<'a> {
    cfg: &'a RunConfig,
    opts: ScanOptions,
    records: Vec<Record>,
}

/// What a check body returns per record before bookkeeping is attached.
struct Outcome {
    case: String,
    prime: Option<u64>,
    expected: Value,
    observed: Value,
    verdict: Verdict,
    anchor: String,
}

fn outcome(case: &str, prime: Option<u64>, expected: Value, observed: Value, verdict: Verdict, anchor: &str) -> Outcome {
    Outcome { case: case.to_string(), prime, expected, observed, verdict, anchor: anchor.to_string() }
}

impl Ctx<'_> {
    /// Runs one unit of a check; an error becomes a failing record and the run continues.
    fn unit(
        &mut self,
        check: Check,
        case: &str,
        prime: Option<u64>,
        anchor: &str,
        body: impl FnOnce(&ScanOptions) -> Result<Vec<Outcome>>,
    ) {
        let start = Instant::now();
        let result = body(&self.opts);
        let elapsed = if self.cfg.timings { start.elapsed().as_millis() as u64 } else { 0 };
        let outcomes = result.unwrap_or_else(|e| {
            vec![outcome(case, prime, Value::Null, json!({ "error": e.to_string() }), Verdict::Fail, anchor)]
        });
        for (i, o) in outcomes.into_iter().enumerate() {
            // the whole unit's time goes on its first record
            let elapsed_ms = if i == 0 { elapsed } else { 0 };
            self.records.push(Record {
                check,
                case: o.case,
                prime: o.prime,
                expected: o.expected,
                observed: o.observed,
                verdict: o.verdict,
                anchor: o.anchor,
                elapsed_ms,
            });
        }
    }
}

fn grass_n(case: CaseId) -> Option<u32> {
    match case {
        CaseId::Grass25 => Some(5),
        CaseId::Grass26 => Some(6),
        _ => None,
    }
}

fn check_count(ctx: &mut Ctx) {
    for &case in &ctx.cfg.cases.clone() {
        for &p in &ctx.cfg.primes.clone() {
            let anchor = if grass_n(case).is_some() { a::COUNT_GAUSSIAN } else { a::COUNT_SHEAR };
            ctx.unit(Check::Count, case.as_str(), Some(p.get()), anchor, |opts| {
                let spec = build_case(case);
                let quiet = ScanOptions { sample_cap: 0, ..*opts };
                let observed = count_points(&spec, p, &quiet)?.matched;
                let expected = match grass_n(case) {
                    Some(n) => gaussian_binomial(n, 2, p.get()),
                    None => {
                        let sheared = change_coordinates(&spec, &pinned_shear(spec.vars.len()));
                        count_points(&sheared, p, &quiet)?.matched
                    }
                };
                Ok(vec![outcome(
                    case.as_str(),
                    Some(p.get()),
                    json!(expected),
                    json!(observed),
                    Verdict::judge(expected == observed),
                    anchor,
                )])
            });
        }
    }
}

fn check_dimension(ctx: &mut Ctx) {
    let primes = ctx.cfg.primes.clone();
    for &case in &ctx.cfg.cases.clone() {
        let anchor = if CaseId::SIGMA_BAR.contains(&case) { a::DIMENSION } else { a::DIMENSION_OTHER };
        ctx.unit(Check::Dimension, case.as_str(), None, anchor, |opts| {
            let spec = build_case(case);
            let est = estimate_dimension(&spec, &primes, &ScanOptions { sample_cap: 0, ..*opts })?;
            let ok = est.consistent && est.estimated_dim == Some(spec.expected_dim);
            let observed = json!({
                "estimate": est.estimated_dim,
                "consistent": est.consistent,
                "counts": est.counts.iter().map(|(p, c)| (p.to_string(), json!(c))).collect::<serde_json::Map<_, _>>(),
                "floor_rule": est.per_prime.iter().map(|(p, d)| (p.to_string(), json!(d))).collect::<serde_json::Map<_, _>>(),
                "log_nearest": est.log_nearest.iter().map(|(p, d)| (p.to_string(), json!(d))).collect::<serde_json::Map<_, _>>(),
            });
            Ok(vec![outcome(case.as_str(), None, json!(spec.expected_dim), observed, Verdict::judge(ok), anchor)])
        });
    }
}

fn points(pts: &[Vec<u64>]) -> Value {
    json!(pts.iter().map(|p| format_point(p)).collect::<Vec<_>>())
}

fn check_singular(ctx: &mut Ctx) {
    for &case in &ctx.cfg.cases.clone() {
        for &p in &ctx.cfg.primes.clone() {
            let q = p.get();
            let locus = rank_locus(case);
            let anchor = match case {
                _ if locus.is_some() => a::SINGULAR_RANK_LOCUS,
                CaseId::G6cSigmaBar => a::SINGULAR_Y_BLOCK,
                CaseId::Grass25 | CaseId::Grass26 | CaseId::B5 | CaseId::B6 | CaseId::Q3G6q => a::SINGULAR_SMOOTH,
                _ => a::SINGULAR_UNSTATED,
            };
            ctx.unit(Check::SingularLocus, case.as_str(), Some(q), anchor, |opts| {
                let spec = build_case(case);
                let r = singular_scan(&spec, locus.as_ref(), p, opts)?;
                let on_planes: serde_json::Map<String, Value> =
                    r.singular_on_planes.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
                let base = json!({
                    "on_variety": r.total_on_variety,
                    "jacobian_singular": r.jacobian_singular,
                    "singular_on_planes": on_planes,
                });
                let mut out = Vec::new();
                let name = case.as_str();
                if locus.is_some() {
                    let mut obs = base.clone();
                    obs["rank_locus"] = json!(r.rank_locus);
                    obs["sets_equal"] = json!(r.sets_equal);
                    obs["symmetric_difference_sample"] = points(&r.symmetric_difference_sample);
                    out.push(outcome(
                        name,
                        Some(q),
                        json!({ "sets_equal": true }),
                        obs,
                        Verdict::judge(r.sets_equal),
                        anchor,
                    ));
                    if case == CaseId::G6qSigmaBar {
                        // the dual plane is P^4, every point of which must be singular
                        let expected = (q.pow(5) - 1) / (q - 1);
                        let observed = r.singular_on_planes.get("u5dual").copied().unwrap_or(0);
                        out.push(outcome(
                            name,
                            Some(q),
                            json!(expected),
                            json!(observed),
                            Verdict::judge(expected == observed),
                            a::SINGULAR_DUAL_PLANE,
                        ));
                    }
                } else if case == CaseId::G6cSigmaBar {
                    let on_pibar = r.singular_on_planes.get("pibar").copied().unwrap_or(0);
                    let mut obs = base.clone();
                    obs["containment_holds"] = json!(on_pibar == r.jacobian_singular);
                    obs["singular_sample"] = points(&r.jacobian_singular_sample);
                    out.push(outcome(name, Some(q), Value::Null, obs, Verdict::Info, anchor));
                } else if anchor == a::SINGULAR_SMOOTH {
                    out.push(outcome(
                        name,
                        Some(q),
                        json!({ "jacobian_singular": 0 }),
                        base,
                        Verdict::judge(r.jacobian_singular == 0),
                        anchor,
                    ));
                } else {
                    out.push(outcome(name, Some(q), Value::Null, base, Verdict::Info, anchor));
                }
                Ok(out)
            });
        }
    }
}

fn tally_json(t: &BTreeMap<u64, u64>) -> Value {
    Value::Object(t.iter().map(|(k, v)| (k.to_string(), json!(v))).collect())
}

fn check_fibers(ctx: &mut Ctx) {
    for &case in &ctx.cfg.cases.clone() {
        let Ok(fc) = FiberCase::for_case(case) else { continue };
        let name = case.as_str();
        for &p in &ctx.cfg.primes.clone() {
            let q = p.get();
            ctx.unit(Check::Fibers, name, Some(q), a::FIBERS_OFF_PLANE, |_| {
                let t = off_plane_fibers(fc, p, OFF_PLANE_TARGETS)?;
                let ok = t.keys().all(|&c| c == 1);
                Ok(vec![outcome(
                    name,
                    Some(q),
                    json!({ "fiber_counts": [1] }),
                    json!({ "fiber_counts": tally_json(&t) }),
                    Verdict::judge(ok),
                    a::FIBERS_OFF_PLANE,
                )])
            });
            match fc {
                FiberCase::G5 if q == 2 => ctx.unit(Check::Fibers, name, Some(q), a::FIBERS_RANK, |_| {
                    let t = g5_rank_tally(p)?;
                    let want = |rank: u64| match rank {
                        3 => Some(1),
                        2 => Some(q + 1),
                        1 => Some(q * q + q + 1),
                        _ => None,
                    };
                    let ok = t.tally.keys().all(|&(rank, c)| want(rank) == Some(c));
                    let observed: serde_json::Map<String, Value> = t
                        .tally
                        .iter()
                        .map(|((rank, c), n)| (format!("rank {rank}, fiber {c}"), json!(n)))
                        .collect();
                    Ok(vec![outcome(
                        name,
                        Some(q),
                        json!({ "rank 3": 1, "rank 2": q + 1, "rank 1": q * q + q + 1, "targets": t.points }),
                        json!({ "tally": observed, "targets": t.points }),
                        Verdict::judge(ok && t.points == (q.pow(12) - 1) / (q - 1)),
                        a::FIBERS_RANK,
                    )])
                }),
                FiberCase::G8 => ctx.unit(Check::Fibers, name, Some(q), a::FIBERS_VERONESE, |_| {
                    let (t, jumping) = g8_plane_tally(p)?;
                    let counts: BTreeMap<u64, u64> = t.tally.iter().map(|(&(_, c), &n)| (c, n)).collect();
                    let ok = counts.keys().all(|&c| c == 1 || c == q + 1) && jumping.len() as u64 == q * q + q + 1;
                    Ok(vec![outcome(
                        name,
                        Some(q),
                        json!({ "jumping_points": q * q + q + 1, "fiber_counts": [1, q + 1] }),
                        json!({ "jumping_points": jumping.len(), "fiber_counts": tally_json(&counts), "jumping_sample": points(&jumping) }),
                        Verdict::judge(ok),
                        a::FIBERS_VERONESE,
                    )])
                }),
                FiberCase::G4 => ctx.unit(Check::Fibers, name, Some(q), a::FIBERS_HYPERPLANE, |_| {
                    let c = g4_plane_comparison(p)?;
                    let disagreement = c.first_disagreement.as_ref().map(|(t, f, d)| {
                        json!({ "point": format_point(t), "fiber": f, "hyperplane_section": d })
                    });
                    Ok(vec![outcome(
                        name,
                        Some(q),
                        json!({ "agreements": c.points }),
                        json!({
                            "agreements": c.agreements,
                            "targets": c.points,
                            "fiber_counts": tally_json(&c.fiber_counts),
                            "first_disagreement": disagreement,
                        }),
                        Verdict::judge(c.agreements == c.points),
                        a::FIBERS_HYPERPLANE,
                    )])
                }),
                _ => {}
            }
        }
    }
    if ctx.cfg.primes.iter().any(|p| p.get() == 2) {
        ctx.unit(Check::Fibers, "linalg", Some(2), a::LINALG_EQUIV, |_| {
            let s = linalg_sweep(4, SmallPrime::new(2)?)?;
            let example = s.zero_y_example.as_ref().map(|(x, u)| json!({ "x": format_point(x), "u_pairs": u }));
            Ok(vec![
                outcome(
                    "linalg",
                    Some(2),
                    json!({ "agreements": s.checked_nonzero_y }),
                    json!({ "agreements": s.agreements_nonzero_y, "checked": s.checked_nonzero_y }),
                    Verdict::judge(s.agreements_nonzero_y == s.checked_nonzero_y),
                    a::LINALG_EQUIV,
                ),
                outcome(
                    "linalg",
                    Some(2),
                    Value::Null,
                    json!({ "checked": s.checked_zero_y, "side1_without_side2": s.zero_y_one_way, "example": example }),
                    Verdict::Info,
                    a::LINALG_ZERO_Y,
                ),
            ])
        });
    }
}

/// Families touched by the configured cases, in the fixed family order.
fn families(cfg: &RunConfig) -> Vec<&'static str> {
    FAMILIES.into_iter().filter(|f| cfg.cases.iter().any(|c| c.family() == Some(*f))).collect()
}

fn check_degrees(ctx: &mut Ctx) {
    let fams = families(ctx.cfg);
    let mut genera: Vec<(&str, u64)> = Vec::new();
    for f in &fams {
        let g = match *f {
            "g4" => ("g4", 4),
            "g5" => ("g5", 5),
            "g6q" | "g6c" => ("g6", 6),
            _ => ("g8", 8),
        };
        if !genera.contains(&g) {
            genera.push(g);
        }
    }
    for (name, g) in genera {
        ctx.unit(Check::Degrees, name, None, a::DEGREE_GENUS, |_| {
            let (how, deg) = match g {
                4 => ("ci_degree(2,3)", ci_degree(&[2, 3])),
                5 => ("ci_degree(2,2,2)", ci_degree(&[2, 2, 2])),
                6 => ("2*grassmann_degree(5)", 2 * grassmann_degree(5)?),
                _ => ("grassmann_degree(6)", grassmann_degree(6)?),
            };
            Ok(vec![outcome(
                name,
                None,
                json!(2 * g - 2),
                json!({ "degree": deg, "via": how }),
                Verdict::judge(deg == 2 * g - 2),
                a::DEGREE_GENUS,
            )])
        });
    }
    ctx.unit(Check::Degrees, "grassmann", None, a::DEGREE_TABLEAUX, |_| {
        let rows: Vec<(usize, u64, u64)> =
            TABLEAU_RANGE.map(|n| (n, count_syt_two_rows(n - 2), hook_length_two_rows(n - 2))).collect();
        let ok = rows.iter().all(|(_, s, h)| s == h);
        let as_map = |pick: fn(&(usize, u64, u64)) -> u64| -> Value {
            Value::Object(rows.iter().map(|r| (format!("G(2,{})", r.0), json!(pick(r)))).collect())
        };
        Ok(vec![outcome("grassmann", None, as_map(|r| r.2), as_map(|r| r.1), Verdict::judge(ok), a::DEGREE_TABLEAUX)])
    });
}

fn check_ledger(ctx: &mut Ctx) {
    let fams = families(ctx.cfg);
    let ledger = shipped_ledger();
    for f in fams {
        ctx.unit(Check::Ledger, f, None, "ledger", |_| {
            let mut out = Vec::new();
            for sec in verify_ledger(&ledger, Some(f))? {
                let entries: Vec<Value> = sec
                    .entries
                    .iter()
                    .map(|e| json!({ "line": e.line, "text": e.text, "holds": e.holds, "detail": e.detail }))
                    .collect();
                out.push(outcome(
                    f,
                    None,
                    json!({ "holds": true }),
                    json!({ "section": sec.name, "holds": sec.holds(), "degenerate": sec.degenerate, "entries": entries }),
                    Verdict::judge(sec.holds()),
                    &sec.anchor,
                ));
            }
            let c = case_table_check(f)?;
            let checks: serde_json::Map<String, Value> = c.checks.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            out.push(outcome(
                f,
                None,
                json!({ "dim_sigma": c.dim_sigma, "fano_index": c.fano_index_r, "half_points": c.half_point_count }),
                json!({ "d": c.d, "checks": checks }),
                Verdict::judge(c.holds()),
                a::CONSTANTS,
            ));
            for nb in normal_bundle_ledger(f)? {
                out.push(outcome(
                    f,
                    None,
                    json!({ "degree": nb.expected_degree }),
                    json!({
                        "space": nb.name,
                        "degree": nb.degree,
                        "rank": nb.rank,
                        "restricted_anticanonical": nb.restricted_anticanonical,
                        "splitting": nb.splitting,
                    }),
                    Verdict::judge(nb.holds),
                    a::NORMAL_BUNDLE,
                ));
            }
            match bundle_anticanonical(f) {
                Ok(b) => out.push(outcome(
                    f,
                    None,
                    json!({ "index": b.stated_index }),
                    json!({
                        "base": b.base,
                        "rank": b.rank,
                        "c1": b.c1,
                        "base_anticanonical": b.base_anticanonical,
                        "index": b.index,
                        "summands": b.summands.iter().map(|s| s.name).collect::<Vec<_>>(),
                    }),
                    Verdict::judge(b.holds()),
                    a::BUNDLE_INDEX,
                )),
                Err(e) => {
                    out.push(outcome(f, None, Value::Null, json!({ "note": e.to_string() }), Verdict::Info, a::BUNDLE_INDEX))
                }
            }
            let prim = primitivity_check(f)?;
            out.push(outcome(
                f,
                None,
                json!({ "divisor": Value::Null }),
                json!({ "intersection": prim.intersection, "divisor": prim.divisor }),
                Verdict::judge(prim.holds()),
                a::PRIMITIVITY,
            ));
            Ok(out)
        });
    }
}

fn check_sections(ctx: &mut Ctx) {
    let (seed, plane_seed) = (ctx.cfg.section_seed, ctx.cfg.plane_section_seed);
    for &case in &ctx.cfg.cases.clone() {
        if !CaseId::SIGMA_BAR.contains(&case) {
            continue;
        }
        let name = case.as_str();
        for &p in &ctx.cfg.primes.clone() {
            let q = p.get();
            ctx.unit(Check::Sections, name, Some(q), a::SECTION_GENERIC, |opts| {
                let base = build_case(case);
                let s = SectionSpec::seeded(&base, base.expected_dim - 3, seed, p, &[])?;
                let w = cut(&base, &s)?;
                let r = section_report(&w, &[p], None, opts)?;
                let row = &r.per_prime[0];
                let observed = json!({
                    "floor_rule": row.floor_dim,
                    "log_nearest": row.log_nearest_dim,
                    "count": row.count,
                    "singular": row.singular,
                    "forms": s.linear_forms.len(),
                    "seed": seed,
                    "draws": s.draws,
                });
                // only p = 3 carries a verdict
                let verdict = if q == 3 { Verdict::judge(row.floor_dim == Some(3)) } else { Verdict::Info };
                Ok(vec![outcome(name, Some(q), json!(3), observed, verdict, a::SECTION_GENERIC)])
            });
            if case == CaseId::G8SigmaBar {
                ctx.unit(Check::Sections, name, Some(q), a::SECTION_PLANE, |opts| {
                    let base = build_case(case);
                    let s = SectionSpec::seeded(&base, 2, plane_seed, p, &["pi"])?;
                    let w = cut(&base, &s)?;
                    let r = section_report(&w, &[p], Some("pi"), opts)?;
                    let row = &r.per_prime[0];
                    let plane = q * q + q + 1;
                    let ok = w.expected_dim == 3 && row.plane_points == Some(plane) && row.singular_off_plane == Some(0);
                    Ok(vec![outcome(
                        name,
                        Some(q),
                        json!({ "expected_dim": 3, "plane_points": plane, "singular_off_plane": 0 }),
                        json!({
                            "expected_dim": w.expected_dim,
                            "plane_points": row.plane_points,
                            "singular_off_plane": row.singular_off_plane,
                            "singular": row.singular,
                            "count": row.count,
                            "seed": plane_seed,
                            "draws": s.draws,
                        }),
                        Verdict::judge(ok),
                        a::SECTION_PLANE,
                    )])
                });
            }
        }
    }
}

/// Runs the configured checks on the current rayon pool.
pub fn run(cfg: &RunConfig) -> Report {
    let opts = ScanOptions { sample_cap: cfg.sample_cap, budget: cfg.budget, ..ScanOptions::default() };
    let mut ctx = Ctx { cfg, opts, records: Vec::new() };
    for &check in &cfg.checks {
        match check {
            Check::Count => check_count(&mut ctx),
            Check::Dimension => check_dimension(&mut ctx),
            Check::SingularLocus => check_singular(&mut ctx),
            Check::Fibers => check_fibers(&mut ctx),
            Check::Degrees => check_degrees(&mut ctx),
            Check::Ledger => check_ledger(&mut ctx),
            Check::Sections => check_sections(&mut ctx),
        }
    }
    Report { tool_version: TOOL_VERSION.to_string(), config: cfg.echo(), records: ctx.records }
}

/// Runs on a dedicated pool of `threads` workers.
pub fn run_with_threads(cfg: &RunConfig, threads: usize) -> Result<Report> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| crate::error::Error::Config { line: 0, msg: format!("thread pool: {e}") })?;
    Ok(pool.install(|| run(cfg)))
}
