use std::io::Write;

use clap::Args;
use nestohedra::algebra::format_rational;
use nestohedra::buildingset::{BuildingSet, Graph};
use nestohedra::invariants::PolytopeInvariants;
use nestohedra::ringcalc::FaceEngine;
use num_bigint::BigInt;
use serde::Serialize;

use super::{join_rationals, write_json, Format};
use crate::config::Settings;
use crate::error::CliError;
use crate::Outcome;

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    /// Graph spec: complete:N, empty:N, star:N, path:N, bipartite:M,N,
    /// join(A,B) or edges:N:0-1,1-2,...
    #[arg(long)]
    pub graph: String,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Serialize)]
struct Record {
    graph: String,
    nodes: usize,
    dimension: u32,
    building_set_size: usize,
    fvector: Vec<serde_json::Value>,
    facets: u64,
    fpoly: String,
    hpoly: String,
    hvector: Vec<String>,
    gamma: Vec<String>,
    dehn_sommerville: bool,
    euler: bool,
    gal: bool,
}

#[derive(Serialize)]
struct Row<'a> {
    graph: &'a str,
    nodes: usize,
    dimension: u32,
    building_set_size: usize,
    fvector: String,
    facets: u64,
    hvector: String,
    gamma: String,
    dehn_sommerville: bool,
    euler: bool,
    gal: bool,
}

/// A JSON number when it fits, else a decimal string.
fn face_number(f: &BigInt) -> serde_json::Value {
    u64::try_from(f).map_or_else(|_| f.to_string().into(), Into::into)
}

pub(crate) fn run(args: &InvariantsArgs, settings: &Settings, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let graph: Graph = args.graph.parse().map_err(|e| CliError::Input(format!("{e}")))?;
    let b = BuildingSet::from_graph(&graph).map_err(|e| CliError::Input(format!("{e}")))?;
    let engine = FaceEngine::new(settings.memo);
    let inv = PolytopeInvariants::compute(&engine, &b).map_err(|e| CliError::Input(format!("{e}")))?;
    let n = inv.dimension;
    let record = Record {
        graph: graph.to_spec(),
        nodes: graph.n(),
        dimension: n,
        building_set_size: inv.building_set_size,
        fvector: inv.fvector.iter().map(face_number).collect(),
        facets: inv.facets,
        fpoly: inv.fpoly.to_string(),
        hpoly: inv.hpoly.to_string(),
        hvector: (0..=n).map(|i| format_rational(&inv.hpoly.coeff(i, n - i))).collect(),
        gamma: inv.gamma.gammas().iter().map(format_rational).collect(),
        dehn_sommerville: inv.dehn_sommerville,
        euler: inv.euler,
        gal: inv.gal,
    };
    match args.format {
        Format::Json => write_json(out, &record)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.serialize(Row {
                graph: &record.graph,
                nodes: record.nodes,
                dimension: n,
                building_set_size: record.building_set_size,
                fvector: inv.fvector.iter().map(ToString::to_string).collect::<Vec<_>>().join(";"),
                facets: record.facets,
                hvector: record.hvector.join(";"),
                gamma: join_rationals(inv.gamma.gammas()),
                dehn_sommerville: record.dehn_sommerville,
                euler: record.euler,
                gal: record.gal,
            })?;
            w.flush()?;
        }
    }
    Ok(Outcome::Passed)
}
