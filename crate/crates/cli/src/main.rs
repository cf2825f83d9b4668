//! `sunada`: command-line front end for the computations in `sunada-core`.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when
//! `paper-tables` finds a mismatch against the embedded fixtures.

mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use output::{Format, RunManifest};

#[derive(Parser, Debug)]
#[command(name = "sunada", version, about = "Almost conjugate subgroups, ADE groups, sign codes and Lie group volumes")]
pub struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Worker threads for partition sweeps and witness scans.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write a JSON run manifest to stderr.
    #[arg(long, global = true)]
    manifest: bool,
    /// Largest m accepted by partition searches.
    #[arg(long = "max-m", global = true, default_value_t = sunada_core::sunada::DEFAULT_MAX_M)]
    max_m: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Admissible partitions of m: representations of Sym(m) giving almost conjugate pairs.
    Search {
        #[arg(long)]
        m: u32,
    },
    /// Character value chi_lambda(mu).
    Char {
        /// Partition, e.g. 3,2,1.
        #[arg(long)]
        lambda: String,
        /// Cycle type, e.g. 1,1,1,1,1,1.
        #[arg(long)]
        mu: String,
    },
    /// Binary polyhedral groups.
    Ade {
        #[command(subcommand)]
        cmd: AdeCmd,
    },
    /// Subgroups of SU(2) x SU(2) through Goursat quintuples.
    Goursat {
        #[command(subcommand)]
        cmd: GoursatCmd,
    },
    /// Diagonal sign subgroups of SO(6).
    Codes {
        #[command(subcommand)]
        cmd: CodesCmd,
    },
    /// Volumes from the Weyl integration formula.
    Volume {
        /// S6, CP3, S3xS3, F12, SU3, Sp2 or SU2cubed.
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        space: Option<String>,
        /// The volume table of the homogeneous nearly Kaehler 6-manifolds.
        #[arg(long)]
        table: bool,
        /// Scalar curvature, a positive rational; rescales 6-dimensional volumes.
        #[arg(long)]
        kappa: Option<String>,
    },
    /// Recompute every embedded reference value and report mismatches.
    PaperTables,
}

#[derive(Subcommand, Debug)]
pub enum AdeCmd {
    /// Conjugacy classes with sizes and real parts.
    Classes {
        #[arg(long)]
        group: String,
    },
    /// Action of the outer involution of 2O or 2I on named classes.
    Action {
        #[arg(long)]
        group: String,
    },
    /// Conjugation action of 2O/{+-1} on i, j, k.
    Bd4Action,
}

#[derive(Subcommand, Debug)]
pub enum GoursatCmd {
    /// Build the fiber product of a quintuple given as JSON or a built-in example.
    Build {
        /// JSON file (or - for stdin) or one of the built-in example names.
        #[arg(long)]
        quintuple: String,
    },
    /// Compare two quintuples: almost conjugacy and a conjugating witness.
    Compare {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
        /// Witness set: 1x2O, 2Ox2O or none.
        #[arg(long, default_value = "1x2O")]
        witnesses: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CodesCmd {
    /// Weight enumerators, almost conjugacy and the exhaustive permutation scan.
    Verify,
}

pub enum Failure {
    Usage(anyhow::Error),
    /// The report is still printed.
    Mismatch(output::Report),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn describe(cmd: &Command) -> (String, Vec<String>) {
    let text = format!("{cmd:?}");
    let name = text.split([' ', '{', '(']).next().unwrap_or("").to_lowercase();
    (name, vec![text])
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let start = Instant::now();
    let result = commands::run(&cli.command, &cli.global);
    let (report, success_code) = match result {
        Ok(r) => (Ok(r), 0),
        Err(Failure::Mismatch(r)) => (Ok(r), 2),
        Err(Failure::Usage(e)) => (Err(e), 1),
    };
    let (code, rows) = match report {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            let ok = report.write(cli.global.format, &mut stdout).and_then(|_| Ok(stdout.flush()?));
            match ok {
                Ok(()) => (success_code, report.rows.len()),
                Err(e) if is_broken_pipe(&e) => (success_code, report.rows.len()),
                Err(e) => {
                    eprintln!("error: {e:#}");
                    (1, 0)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            (1, 0)
        }
    };
    if cli.global.manifest {
        let (subcommand, parameters) = describe(&cli.command);
        let m = RunManifest {
            subcommand,
            parameters,
            tool_version: env!("CARGO_PKG_VERSION"),
            elapsed_ms: start.elapsed().as_millis(),
            rows,
        };
        if let Ok(s) = serde_json::to_string(&m) {
            eprintln!("{s}");
        }
    }
    ExitCode::from(code)
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<std::io::Error>()
            .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
            || c.downcast_ref::<serde_json::Error>().is_some_and(|j| j.io_error_kind() == Some(std::io::ErrorKind::BrokenPipe))
            || c.downcast_ref::<csv::Error>().is_some_and(|c| matches!(c.kind(), csv::ErrorKind::Io(io) if io.kind() == std::io::ErrorKind::BrokenPipe))
    })
}

pub fn read_input(path: &str) -> anyhow::Result<String> {
    use anyhow::Context;
    if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(PathBuf::from(path)).with_context(|| format!("reading {path}"))
}
