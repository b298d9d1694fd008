use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use keyvariety_core::cli::{self, emit_report, parse_config, resolve_threads, run_with_threads, THREADS_ENV};
use keyvariety_core::Error;

#[derive(Parser)]
#[command(name = "keyvariety", version, about = "Finite-field checks of the extended mid point catalog")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks listed in a config file and write a JSON report.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        threads: Option<usize>,
        /// Report path; overrides `output` in the config. Stdout when neither is set.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count rational points of a catalog case.
    Count {
        #[arg(long)]
        case: String,
        #[arg(long)]
        prime: u64,
    },
    /// Enumerate the fiber of a resolution over one point, given as colon-separated coordinates.
    Fiber {
        #[arg(long)]
        case: String,
        #[arg(long)]
        prime: u64,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Verify the shipped identity ledger.
    Ledger {
        #[arg(long)]
        case: Option<String>,
    },
    /// Cut a case by the linear forms in a file and report counts and singular points.
    Section {
        #[arg(long)]
        case: String,
        #[arg(long)]
        forms: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u64>,
        /// Planes every form must vanish on.
        #[arg(long, value_delimiter = ',')]
        contains: Vec<String>,
        /// Plane whose points and off-plane singular points are reported.
        #[arg(long)]
        track: Option<String>,
    },
}

/// Problems with the invocation itself map to exit status 2.
fn is_config_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Config { .. }
            | Error::InvalidPrime(_)
            | Error::UnknownCase(_)
            | Error::UnknownPlane(_)
            | Error::Parse { .. }
            | Error::UnknownVariable(_)
            | Error::Io(_)
            | Error::Arity { .. }
            | Error::ZeroPoint
            | Error::DependentForms
            | Error::PlaneViolation { .. }
            | Error::Dimension(_)
    )
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if is_config_error(&e) { 2 } else { 1 })
}

fn print(result: keyvariety_core::Result<(String, i32)>) -> ExitCode {
    match result {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => fail(e),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match args.command {
        Command::Run { config, threads, out } => {
            let cfg = match parse_config(&config) {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            let env = std::env::var(THREADS_ENV).ok();
            let n = match resolve_threads(threads, cfg.threads, env.as_deref()) {
                Ok(n) => n,
                Err(e) => return fail(e),
            };
            let report = match run_with_threads(&cfg, n) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            match out.or(cfg.output.clone()) {
                Some(path) => {
                    if let Err(e) = emit_report(&report, &path) {
                        return fail(e);
                    }
                    eprintln!(
                        "{} records: {} pass, {} fail, {} info -> {}",
                        report.records.len(),
                        report.count(cli::Verdict::Pass),
                        report.count(cli::Verdict::Fail),
                        report.count(cli::Verdict::Info),
                        path.display()
                    );
                }
                None => print!("{}", report.to_canonical_string()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Command::Count { case, prime } => print(cli::count_command(&case, prime)),
        Command::Fiber { case, prime, point } => print(cli::fiber_command(&case, prime, &point)),
        Command::Ledger { case } => print(cli::ledger_command(case.as_deref())),
        Command::Section { case, forms, primes, contains, track } => {
            let text = match std::fs::read_to_string(&forms) {
                Ok(t) => t,
                Err(e) => return fail(e.into()),
            };
            print(cli::section_command(&case, &text, &primes, &contains, track.as_deref()))
        }
    }
}
