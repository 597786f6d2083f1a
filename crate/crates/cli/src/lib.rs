//! `nesto`: face numbers, h- and γ-vectors of graphical nestohedra, and
//! verification runs comparing the facet recursion with the closed-form
//! generating series.

mod commands;
mod config;
mod error;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use nestohedra::buildingset::KeyMode;

pub use commands::{FamilySet, Format, GraphClass};
pub use config::{Settings, MAX_ORDER};
pub use error::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "nesto", version, about = "Exact face polynomials of graphical nestohedra")]
pub struct Cli {
    /// Worker threads for parallel scans.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
    /// Settings file with key=value lines (order, memo, jobs).
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Memoize f-polynomials up to graph isomorphism instead of label order.
    #[arg(long, global = true)]
    pub iso_memo: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// f-vector, h-polynomial and γ-vector of one graph's nestohedron.
    Invariants(commands::InvariantsArgs),
    /// Compare series coefficients with the facet recursion.
    Verify(commands::VerifyArgs),
    /// Check the differential identities of the generating series.
    Identities(commands::IdentitiesArgs),
    /// γ-vectors over a family or a class of graphs, as CSV.
    GalScan(commands::GalScanArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Failed,
}

impl Cli {
    pub fn settings(&self) -> Result<Settings, CliError> {
        let mut s = match &self.config {
            Some(path) => Settings::load(path)?,
            None => Settings::default(),
        };
        if let Some(j) = self.jobs {
            if j == 0 {
                return Err(CliError::Usage("--jobs must be positive".into()));
            }
            s.jobs = Some(j);
        }
        if self.iso_memo {
            s.memo = KeyMode::Isomorphism;
        }
        Ok(s)
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code: 0 success, 1 verification or scan failure, 2 usage or input error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(Outcome::Passed) => EXIT_OK,
        Ok(Outcome::Failed) => EXIT_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let settings = cli.settings()?;
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let mut job = || commands::dispatch(&cli.command, &settings, &mut stdout, &mut stderr);
    let result = match settings.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {n} workers: {e}")))?
            .install(job),
        None => job(),
    };
    out.write_all(&stdout)?;
    err.write_all(&stderr)?;
    result
}
