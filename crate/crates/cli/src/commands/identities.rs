use std::io::Write;

use clap::Args;
use nestohedra::series::{check_identities, SeriesBundle};

use super::write_json;
use crate::config::{Settings, MAX_ORDER};
use crate::error::CliError;
use crate::Outcome;

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    /// Truncation order, 2 to 10; defaults to the configured order.
    #[arg(long)]
    pub order: Option<u32>,
    /// Drop the x³ term of Pe_f before checking.
    #[arg(long, hide = true)]
    pub corrupt: bool,
}

pub(crate) fn run(
    args: &IdentitiesArgs,
    settings: &Settings,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let order = args.order.unwrap_or(settings.order);
    if !(2..=MAX_ORDER).contains(&order) {
        return Err(CliError::Usage(format!("--order must lie in 2..={MAX_ORDER}, got {order}")));
    }
    let mut bundle = SeriesBundle::compute(order).map_err(|e| CliError::Usage(e.to_string()))?;
    if args.corrupt {
        bundle.pe_f.remove_coeff(3, 0);
    }
    let report = check_identities(&bundle);
    if let Some(fail) = report.first_failure() {
        let at = fail.mismatch.as_ref().map(|m| format!(" at ({}, {}): difference {}", m.k, m.l, m.difference));
        writeln!(err, "identity {} failed{}", fail.id, at.unwrap_or_default())?;
    }
    write_json(out, &report)?;
    Ok(if report.all_passed() { Outcome::Passed } else { Outcome::Failed })
}
