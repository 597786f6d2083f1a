use std::io::Write;

use clap::{Args, ValueEnum};
use nestohedra::buildingset::{connected_graph_classes, graph_classes, BuildingSet, Graph, MAX_CLASS_NODES};
use nestohedra::invariants::{gal_check_poly, gal_check_series, GalVerdict};
use nestohedra::ringcalc::FaceEngine;
use nestohedra::series::{family_h, Family};
use rayon::prelude::*;
use serde::Serialize;

use super::{join_rationals, FamilySet};
use crate::config::Settings;
use crate::error::CliError;
use crate::Outcome;

/// Largest `k + l` scanned for a family.
pub const MAX_BOUND: u32 = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphClass {
    /// Connected graphs, up to isomorphism.
    Connected,
    /// All graphs, up to isomorphism.
    All,
}

#[derive(Debug, Args)]
pub struct GalScanArgs {
    /// Scan a family over k + l ≤ --bound.
    #[arg(long, conflicts_with = "graph_class")]
    pub family: Option<FamilySet>,
    #[arg(long)]
    pub bound: Option<u32>,
    /// Scan every graph of a class on --nodes nodes.
    #[arg(long, value_enum)]
    pub graph_class: Option<GraphClass>,
    #[arg(long)]
    pub nodes: Option<usize>,
}

#[derive(Serialize)]
struct FamilyRow {
    family: Family,
    k: u32,
    l: u32,
    graph: String,
    dimension: u32,
    gamma: String,
    gal: bool,
}

#[derive(Serialize)]
struct GraphRow {
    graph: String,
    nodes: usize,
    dimension: u32,
    gamma: String,
    gal: bool,
}

pub(crate) fn run(
    args: &GalScanArgs,
    settings: &Settings,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let engine = FaceEngine::new(settings.memo);
    match (&args.family, args.graph_class) {
        (Some(families), None) => {
            let bound = args.bound.ok_or_else(|| CliError::Usage("--family needs --bound".into()))?;
            if !(1..=MAX_BOUND).contains(&bound) {
                return Err(CliError::Usage(format!("--bound must lie in 1..={MAX_BOUND}, got {bound}")));
            }
            scan_families(&engine, &families.0, bound, out, err)
        }
        (None, Some(class)) => {
            if args.bound.is_some() {
                return Err(CliError::Usage("--bound applies to --family scans".into()));
            }
            let nodes = args.nodes.ok_or_else(|| CliError::Usage("--graph-class needs --nodes".into()))?;
            if !(1..=MAX_CLASS_NODES).contains(&nodes) {
                return Err(CliError::Usage(format!("--nodes must lie in 1..={MAX_CLASS_NODES}, got {nodes}")));
            }
            scan_class(&engine, class, nodes, out, err)
        }
        _ => Err(CliError::Usage("give either --family with --bound, or --graph-class with --nodes".into())),
    }
}

fn verdict(engine: &FaceEngine, g: &Graph) -> Result<GalVerdict, CliError> {
    let b = BuildingSet::from_graph(g).map_err(|e| CliError::Input(e.to_string()))?;
    let h = engine.fpoly(&b).subst_h();
    gal_check_poly(&h, b.dimension() as u32).map_err(|e| CliError::Input(e.to_string()))
}

fn scan_families(
    engine: &FaceEngine,
    families: &[Family],
    bound: u32,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let mut failed = false;
    let mut w = csv::Writer::from_writer(out);
    for &fam in families {
        let rows: Vec<FamilyRow> = fam
            .indices(bound)
            .par_iter()
            .map(|&(k, l)| {
                let g = fam.graph(k, l).expect("in-family index");
                let v = verdict(engine, &g)?;
                let gamma = v.gamma();
                Ok(FamilyRow {
                    family: fam,
                    k,
                    l,
                    graph: g.to_spec(),
                    dimension: gamma.dimension(),
                    gamma: join_rationals(gamma.gammas()),
                    gal: v.passed(),
                })
            })
            .collect::<Result<_, CliError>>()?;
        for row in &rows {
            if !row.gal {
                failed = true;
                writeln!(err, "violation: {} ({}, {}): γ = {}", fam, row.k, row.l, row.gamma)?;
            }
            w.serialize(row)?;
        }
        let series = family_h(fam, bound).map_err(|e| CliError::Usage(e.to_string()))?;
        for v in gal_check_series(&series, fam).violations {
            failed = true;
            writeln!(err, "violation: {} series {:?} {:?}: {}", fam, v.index, v.condition, v.witness)?;
        }
    }
    w.flush()?;
    Ok(if failed { Outcome::Failed } else { Outcome::Passed })
}

fn scan_class(
    engine: &FaceEngine,
    class: GraphClass,
    nodes: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let graphs = match class {
        GraphClass::Connected => connected_graph_classes(nodes),
        GraphClass::All => graph_classes(nodes),
    };
    let rows: Vec<GraphRow> = graphs
        .par_iter()
        .map(|g| {
            let v = verdict(engine, g)?;
            let gamma = v.gamma();
            Ok(GraphRow {
                graph: g.to_spec(),
                nodes,
                dimension: gamma.dimension(),
                gamma: join_rationals(gamma.gammas()),
                gal: v.passed(),
            })
        })
        .collect::<Result<_, CliError>>()?;
    let mut failed = false;
    let mut w = csv::Writer::from_writer(out);
    for row in &rows {
        if !row.gal {
            failed = true;
            writeln!(err, "violation: {}: γ = {}", row.graph, row.gamma)?;
        }
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(if failed { Outcome::Failed } else { Outcome::Passed })
}
