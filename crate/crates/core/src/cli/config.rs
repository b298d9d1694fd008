//! Flat `key = value` run configuration.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::algebra::SmallPrime;
use crate::catalog::CaseId;
use crate::enumerate::{DEFAULT_BUDGET, DEFAULT_SAMPLE_CAP};
use crate::error::{Error, Result};

/// Seed for the generic sections; the draw with this seed is the committed acceptance draw.
pub const DEFAULT_SECTION_SEED: u64 = 1;
/// Seed for the genus-8 sections through the plane `pi`.
pub const DEFAULT_PLANE_SECTION_SEED: u64 = 12;

/// Checks in execution order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Count,
    Dimension,
    SingularLocus,
    Fibers,
    Degrees,
    Ledger,
    Sections,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Count,
        Check::Dimension,
        Check::SingularLocus,
        Check::Fibers,
        Check::Degrees,
        Check::Ledger,
        Check::Sections,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Count => "count",
            Check::Dimension => "dimension",
            Check::SingularLocus => "singular-locus",
            Check::Fibers => "fibers",
            Check::Degrees => "degrees",
            Check::Ledger => "ledger",
            Check::Sections => "sections",
        }
    }

    pub fn parse(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.as_str() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub cases: Vec<CaseId>,
    /// Sorted, without repeats.
    pub primes: Vec<SmallPrime>,
    /// Sorted into execution order, without repeats.
    pub checks: Vec<Check>,
    pub threads: Option<usize>,
    pub output: Option<PathBuf>,
    pub sample_cap: usize,
    pub budget: u64,
    pub section_seed: u64,
    pub plane_section_seed: u64,
    /// Record wall-clock times; off by default so reports stay byte-identical.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cases: CaseId::SIGMA_BAR.to_vec(),
            primes: [2, 3].map(|p| SmallPrime::new(p).unwrap()).to_vec(),
            checks: Vec::new(),
            threads: None,
            output: None,
            sample_cap: DEFAULT_SAMPLE_CAP,
            budget: DEFAULT_BUDGET,
            section_seed: DEFAULT_SECTION_SEED,
            plane_section_seed: DEFAULT_PLANE_SECTION_SEED,
            timings: false,
        }
    }
}

impl RunConfig {
    /// Everything that influences report content. Threads and the output path do not.
    pub fn echo(&self) -> Value {
        json!({
            "cases": self.cases.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
            "primes": self.primes.iter().map(|p| p.get()).collect::<Vec<_>>(),
            "checks": self.checks.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
            "sample_cap": self.sample_cap,
            "budget": self.budget,
            "section_seed": self.section_seed,
            "plane_section_seed": self.plane_section_seed,
            "timings": self.timings,
        })
    }
}

fn list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn number<T: std::str::FromStr>(value: &str, line: usize, key: &str) -> Result<T> {
    value.parse().map_err(|_| Error::Config { line, msg: format!("{key}: expected a number, got {value:?}") })
}

pub fn parse_config_str(text: &str) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    let mut saw_checks = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let (key, value) = body
            .split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| Error::Config { line, msg: format!("expected key=value, got {body:?}") })?;
        let err = |msg: String| Error::Config { line, msg };
        match key {
            "cases" => {
                let mut cases = Vec::new();
                for name in list(value) {
                    let add: Vec<CaseId> = match name {
                        "all" => CaseId::ALL.to_vec(),
                        "sigma_bar" => CaseId::SIGMA_BAR.to_vec(),
                        _ => vec![CaseId::parse(name).map_err(|e| err(e.to_string()))?],
                    };
                    for c in add {
                        if !cases.contains(&c) {
                            cases.push(c);
                        }
                    }
                }
                cfg.cases = cases;
            }
            "primes" => {
                let mut primes = list(value)
                    .map(|s| {
                        let n: u64 = number(s, line, key)?;
                        SmallPrime::new(n).map_err(|e| err(e.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                primes.sort_by_key(|p| p.get());
                primes.dedup();
                if primes.is_empty() {
                    return Err(err("primes: empty list".into()));
                }
                cfg.primes = primes;
            }
            "checks" => {
                let mut checks = list(value)
                    .map(|s| Check::parse(s).ok_or_else(|| err(format!("unknown check {s:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                checks.sort();
                checks.dedup();
                cfg.checks = checks;
                saw_checks = true;
            }
            "threads" => {
                let n: usize = number(value, line, key)?;
                if n == 0 {
                    return Err(err("threads must be at least 1".into()));
                }
                cfg.threads = Some(n);
            }
            "output" => cfg.output = Some(PathBuf::from(value)),
            "sample_cap" => cfg.sample_cap = number(value, line, key)?,
            "budget" => cfg.budget = number(value, line, key)?,
            "section_seed" => cfg.section_seed = number(value, line, key)?,
            "plane_section_seed" => cfg.plane_section_seed = number(value, line, key)?,
            "timings" => {
                cfg.timings = match value {
                    "true" | "1" | "yes" => true,
                    "false" | "0" | "no" => false,
                    _ => return Err(err(format!("timings: expected true or false, got {value:?}"))),
                }
            }
            _ => return Err(err(format!("unknown key {key:?}"))),
        }
    }
    if !saw_checks {
        return Err(Error::Config { line: 0, msg: "missing required key `checks`".into() });
    }
    Ok(cfg)
}

pub fn parse_config(path: &Path) -> Result<RunConfig> {
    parse_config_str(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_config_takes_defaults() {
        let cfg = parse_config_str("cases=g5\nchecks=count").unwrap();
        assert_eq!(cfg.cases, vec![CaseId::G5SigmaBar]);
        assert_eq!(cfg.checks, vec![Check::Count]);
        assert_eq!(cfg.primes.iter().map(|p| p.get()).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(cfg.sample_cap, 1024);
        assert_eq!(cfg.threads, None);
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse_config_str("checks=count\n\nprimes=4\n").unwrap_err();
        assert!(matches!(e, Error::Config { line: 3, .. }), "{e}");
        assert!(e.to_string().contains("4 is not a prime"), "{e}");
        assert!(matches!(parse_config_str("checks=count\nthreads=0"), Err(Error::Config { line: 2, .. })));
        assert!(matches!(parse_config_str("checks=bogus"), Err(Error::Config { line: 1, .. })));
        assert!(matches!(parse_config_str("cases=g7\nchecks=count"), Err(Error::Config { line: 1, .. })));
        assert!(parse_config_str("cases=g5").is_err());
    }

    #[test]
    fn checks_are_put_in_run_order() {
        let cfg = parse_config_str("checks=ledger, count,ledger # dup\n").unwrap();
        assert_eq!(cfg.checks, vec![Check::Count, Check::Ledger]);
        assert!(parse_config_str("checks=").unwrap().checks.is_empty());
    }
}
