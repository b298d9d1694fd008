//! Report records and canonical JSON emission.

use std::path::Path;

use serde_json::{json, Value};

use super::config::Check;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Info,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Info => "info",
        }
    }

    pub fn judge(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub check: Check,
    pub case: String,
    pub prime: Option<u64>,
    pub expected: Value,
    pub observed: Value,
    pub verdict: Verdict,
    pub anchor: String,
    pub elapsed_ms: u64,
}

impl Record {
    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check.as_str(),
            "case": self.case,
            "prime": self.prime,
            "expected": self.expected,
            "observed": self.observed,
            "verdict": self.verdict.as_str(),
            "anchor": self.anchor,
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub tool_version: String,
    pub config: Value,
    pub records: Vec<Record>,
}

impl Report {
    pub fn count(&self, v: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == v).count()
    }

    pub fn has_fail(&self) -> bool {
        self.count(Verdict::Fail) > 0
    }

    /// 0 when every record passes or is informational, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_fail())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "tool_version": self.tool_version,
            "config": self.config,
            "records": self.records.iter().map(Record::to_json).collect::<Vec<_>>(),
            "summary": {
                "pass": self.count(Verdict::Pass),
                "fail": self.count(Verdict::Fail),
                "info": self.count(Verdict::Info),
            },
        })
    }

    /// Keys sorted at every level, two-space indent, trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn emit_report(report: &Report, path: &Path) -> Result<()> {
    std::fs::write(path, report.to_canonical_string())?;
    Ok(())
}
