//! `pcount`: exact partition counts from the command line.
//!
//! Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.

mod cache;
mod output;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use pcount_core::restricted::{self, evaluate};
use pcount_core::verify::{self, VerifyConfig};
use pcount_core::PTable;

use output::{OutputFormat, Row, Single};

#[derive(Debug, Parser)]
#[command(name = "pcount", version, about = "Exact integer partition counts")]
struct Cli {
    /// Output format for computed values
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    format: OutputFormat,

    /// Load and update a persistent p(n) table at PATH
    #[arg(long, value_name = "PATH", global = true)]
    cache: Option<PathBuf>,

    /// Report table extensions, pentagonal terms and wall time on stderr
    #[arg(long, global = true)]
    stats: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of partitions of N
    P { n: u64 },
    /// Partitions of N with no part divisible by M
    Pm {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        n: u64,
        /// Count partitions with at least one part divisible by M instead
        #[arg(long)]
        complement: bool,
    },
    /// Partitions of N in which every part appears fewer than M times
    Qm {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        n: u64,
    },
    /// Rows n, p, p_m, q_m, complement for n = 0..=MAX_N
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long = "max-n")]
        max_n: u64,
    },
    /// Cross-check the fast path against the independent oracles
    Verify {
        /// Bound for the enumeration suites (at most 60)
        #[arg(long = "max-n", default_value_t = 30)]
        max_n: u64,
        #[arg(long = "max-m", default_value_t = 5)]
        max_m: u64,
        /// Bound for the dynamic-programming suites (defaults to --max-n)
        #[arg(long = "dp-max-n")]
        dp_max_n: Option<u64>,
        /// Add one to the stored p(INDEX) before checking
        #[arg(long, value_name = "INDEX", hide = true)]
        inject_fault: Option<u64>,
    },
}

enum Failure {
    Usage(String),
    Io(String),
    Verification,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<pcount_core::Error> for Failure {
    fn from(e: pcount_core::Error) -> Self {
        use pcount_core::Error::*;
        match e {
            InvalidModulus(_) | EnumerationLimit { .. } => Failure::Usage(e.to_string()),
            other => Failure::Io(other.to_string()),
        }
    }
}

struct Session {
    table: PTable,
    stale_cache: bool,
    /// Pentagonal terms summed outside the table itself.
    terms: u64,
    persist: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("pcount: error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("pcount: usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let started = Instant::now();
    let mut session = match &cli.cache {
        Some(path) => {
            let loaded = cache::load(path);
            Session {
                table: loaded.table,
                stale_cache: loaded.stale,
                terms: 0,
                persist: true,
            }
        }
        None => Session {
            table: PTable::new(),
            stale_cache: false,
            terms: 0,
            persist: false,
        },
    };

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = execute(&cli, &mut session, &mut out);
    out.flush()?;

    if let (Some(path), true) = (&cli.cache, session.persist) {
        if session.stale_cache || session.table.stats().extensions > 0 {
            cache::store(path, &session.table)
                .map_err(|e| Failure::Io(format!("writing cache {}: {e}", path.display())))?;
        }
    }

    if cli.stats {
        let s = session.table.stats();
        eprintln!(
            "stats: extensions={} pentagonal_terms={} elapsed_ms={:.3}",
            s.extensions,
            s.terms + session.terms,
            started.elapsed().as_secs_f64() * 1e3
        );
    }
    result
}

fn execute<W: Write>(cli: &Cli, s: &mut Session, out: &mut W) -> Result<(), Failure> {
    match cli.command {
        Command::P { n } => {
            let count = s.table.p(to_index(n)?);
            output::write_single(out, cli.format, &Single { m: None, n, count })?;
        }
        Command::Pm { m, n, complement } => {
            let eval = evaluate(&mut s.table, m, n)?;
            s.terms += eval.terms as u64;
            let count = if complement {
                restricted::complement(&mut s.table, m, n)?
            } else {
                eval.count
            };
            output::write_single(
                out,
                cli.format,
                &Single {
                    m: Some(m),
                    n,
                    count,
                },
            )?;
        }
        Command::Qm { m, n } => {
            let eval = evaluate(&mut s.table, m, n)?;
            s.terms += eval.terms as u64;
            let count = restricted::q_m(&mut s.table, m, n)?;
            output::write_single(
                out,
                cli.format,
                &Single {
                    m: Some(m),
                    n,
                    count,
                },
            )?;
        }
        Command::Table { m, max_n } => {
            s.table.extend(max_n);
            let mut rows = Vec::with_capacity(max_n as usize + 1);
            for n in 0..=max_n {
                let eval = evaluate(&mut s.table, m, n)?;
                s.terms += 2 * eval.terms as u64;
                rows.push(Row {
                    n,
                    p: s.table.p(to_index(n)?),
                    q_m: restricted::q_m(&mut s.table, m, n)?,
                    complement: restricted::complement(&mut s.table, m, n)?,
                    p_m: eval.count,
                });
            }
            output::write_table(out, cli.format, &rows)?;
        }
        Command::Verify {
            max_n,
            max_m,
            dp_max_n,
            inject_fault,
        } => {
            let config = VerifyConfig::new(max_n, max_m, dp_max_n)?;
            s.table.extend(config.table_extent());
            if let Some(index) = inject_fault {
                let Some(value) = s.table.get(index) else {
                    return Err(Failure::Usage(format!(
                        "--inject-fault index {index} is beyond the verified range 0..={}",
                        config.table_extent()
                    )));
                };
                let bumped = value + 1u32;
                s.table.overwrite_entry(index, bumped);
                s.persist = false;
            }
            let report = verify::run(&mut s.table, &config)?;
            for suite in &report.suites {
                match &suite.failure {
                    None => writeln!(out, "PASS {} ({} checks)", suite.suite.name(), suite.checks)?,
                    Some(c) => {
                        writeln!(out, "FAIL {}: first counterexample {c}", suite.suite.name())?
                    }
                }
            }
            let passed = report.suites.iter().filter(|s| s.passed()).count();
            writeln!(out, "{passed}/{} suites passed", report.suites.len())?;
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn to_index(n: u64) -> Result<i64, Failure> {
    i64::try_from(n).map_err(|_| Failure::Usage(format!("n = {n} is too large")))
}
