use std::io::Write;

use clap::Args;
use nestohedra::ringcalc::FaceEngine;
use nestohedra::series::{coeff_normalized, family_f, Family};
use rayon::prelude::*;
use serde::Serialize;

use super::{write_json, FamilySet};
use crate::config::Settings;
use crate::error::CliError;
use crate::Outcome;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// pe, st, starmarked, nabla-because, because-because or all.
    #[arg(long)]
    pub family: FamilySet,
    /// Largest k + l compared; at most the truncation order.
    #[arg(long)]
    pub max_order: Option<u32>,
}

#[derive(Serialize)]
struct Mismatch {
    k: u32,
    l: u32,
    series: String,
    recursion: String,
}

#[derive(Serialize)]
struct FamilyReport {
    family: Family,
    checked: usize,
    mismatches: Vec<Mismatch>,
}

#[derive(Serialize)]
struct Report {
    order: u32,
    max_order: u32,
    passed: bool,
    families: Vec<FamilyReport>,
}

pub(crate) fn run(
    args: &VerifyArgs,
    settings: &Settings,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let order = settings.order;
    let max_order = args.max_order.unwrap_or(order);
    if max_order > order {
        return Err(CliError::Usage(format!("--max-order {max_order} exceeds the truncation order {order}")));
    }
    let engine = FaceEngine::new(settings.memo);
    let families: Vec<FamilyReport> =
        args.family.0.iter().map(|&fam| check_family(&engine, fam, order, max_order)).collect::<Result<_, _>>()?;
    let passed = families.iter().all(|f| f.mismatches.is_empty());
    for f in &families {
        for m in &f.mismatches {
            writeln!(
                err,
                "mismatch: {} ({}, {}): series {} vs recursion {}",
                f.family, m.k, m.l, m.series, m.recursion
            )?;
        }
    }
    write_json(out, &Report { order, max_order, passed, families })?;
    Ok(if passed { Outcome::Passed } else { Outcome::Failed })
}

fn check_family(engine: &FaceEngine, fam: Family, order: u32, max_order: u32) -> Result<FamilyReport, CliError> {
    let series = family_f(fam, order).map_err(|e| CliError::Usage(e.to_string()))?;
    let indices = fam.indices(max_order);
    let mismatches = indices
        .par_iter()
        .filter_map(|&(k, l)| {
            let expected = coeff_normalized(&series, fam, k, l).expect("index within order");
            let graph = fam.graph(k, l).expect("in-family index");
            let actual = engine.fpoly_graph(&graph).expect("family graphs are small");
            (expected != actual).then(|| Mismatch { k, l, series: expected.to_string(), recursion: actual.to_string() })
        })
        .collect();
    Ok(FamilyReport { family: fam, checked: indices.len(), mismatches })
}
