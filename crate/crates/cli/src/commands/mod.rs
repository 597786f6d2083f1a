mod gal_scan;
mod identities;
mod invariants;
mod verify;

use std::io::Write;
use std::str::FromStr;

use clap::ValueEnum;
use nestohedra::algebra::{format_rational, Rational};
use nestohedra::series::Family;

use crate::config::Settings;
use crate::error::CliError;
use crate::{Command, Outcome};

pub use gal_scan::{GalScanArgs, GraphClass};
pub use identities::IdentitiesArgs;
pub use invariants::InvariantsArgs;
pub use verify::VerifyArgs;

pub(crate) fn dispatch(
    command: &Command,
    settings: &Settings,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    match command {
        Command::Invariants(a) => invariants::run(a, settings, out),
        Command::Verify(a) => verify::run(a, settings, out, err),
        Command::Identities(a) => identities::run(a, settings, out, err),
        Command::GalScan(a) => gal_scan::run(a, settings, out, err),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// One family, or `all` of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySet(pub Vec<Family>);

impl FromStr for FamilySet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(FamilySet(Family::ALL.to_vec()));
        }
        s.parse::<Family>().map(|f| FamilySet(vec![f])).map_err(|e| {
            let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
            format!("{e}; expected one of {} or all", names.join(", "))
        })
    }
}

pub(crate) fn join_rationals(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(";")
}

pub(crate) fn write_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}
