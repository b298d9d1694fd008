//! Batch front end: configuration, check orchestration and JSON reports.

pub mod anchors;
mod commands;
mod config;
mod report;
mod run;

pub use config::{
    parse_config, parse_config_str, Check, RunConfig, DEFAULT_PLANE_SECTION_SEED, DEFAULT_SECTION_SEED,
};
pub use commands::{count_command, fiber_command, ledger_command, section_command};
pub use report::{emit_report, Record, Report, Verdict};
pub use run::{run, run_with_threads, TOOL_VERSION};

use crate::error::{Error, Result};

pub const THREADS_ENV: &str = "KEYVARIETY_THREADS";

/// Worker count: command-line flag, then config file, then `KEYVARIETY_THREADS`, then the CPU count.
pub fn resolve_threads(flag: Option<usize>, config: Option<usize>, env: Option<&str>) -> Result<usize> {
    if let Some(n) = flag.or(config) {
        return if n == 0 { Err(Error::Config { line: 0, msg: "threads must be at least 1".into() }) } else { Ok(n) };
    }
    if let Some(v) = env {
        return match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(Error::Config { line: 0, msg: format!("{THREADS_ENV}={v:?} is not a positive integer") }),
        };
    }
    Ok(std::thread::available_parallelism().map_or(1, |n| n.get()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_precedence() {
        assert_eq!(resolve_threads(Some(3), Some(5), Some("7")).unwrap(), 3);
        assert_eq!(resolve_threads(None, Some(5), Some("7")).unwrap(), 5);
        assert_eq!(resolve_threads(None, None, Some("7")).unwrap(), 7);
        assert!(resolve_threads(None, None, Some("zero")).is_err());
        assert!(resolve_threads(Some(0), None, None).is_err());
        assert!(resolve_threads(None, None, None).unwrap() >= 1);
    }
}
