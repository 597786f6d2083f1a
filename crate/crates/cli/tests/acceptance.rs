//! Acceptance gate: one line per criterion, exact comparisons throughout,
//! each criterion held to a wall-clock budget.

#[path = "../../core/tests/common/mod.rs"]
mod oracles;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use nestohedra::algebra::{gamma_extract, rat, Poly2};
use nestohedra::buildingset::{labelled_graphs, BuildingSet, Graph};
use nestohedra::invariants::{dehn_sommerville, euler_holds, fvector, gal_check_poly, gamma, GalVerdict};
use nestohedra::ringcalc::{boundary, boundary_graph, FaceEngine};
use nestohedra::series::{check_identities, coeff_normalized, family_f, identity_suite, Family, SeriesBundle};
use oracles::*;

/// Every comparison below is exact rational or integer equality.
const TOLERANCE: &str = "exact";

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    check: fn() -> Result<String, String>,
}

const CRITERIA: [Criterion; 7] = [
    Criterion {
        id: 1,
        name: "series coefficients equal recursion f-polynomials",
        budget: secs(60),
        check: master_oracle,
    },
    Criterion { id: 2, name: "identities I1-I8 at order 8", budget: secs(30), check: identities_at_eight },
    Criterion { id: 3, name: "gamma nonnegative on bipartite, Pe, St", budget: secs(60), check: gal_scan },
    Criterion { id: 4, name: "spot values", budget: secs(10), check: spot_values },
    Criterion { id: 5, name: "structure over connected graphs on <= 6 nodes", budget: secs(120), check: structure },
    Criterion { id: 6, name: "closed-form boundaries of Pe, St, K_{s,t}", budget: secs(60), check: d_formulas },
    Criterion { id: 7, name: "negative controls", budget: secs(60), check: negative_controls },
];

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(detail) if elapsed <= c.budget => format!("PASS  {detail}"),
            Ok(detail) => format!("FAIL  over budget: {detail}"),
            Err(why) => format!("FAIL  {why}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!(
            "criterion {}: {:<48} [{TOLERANCE}; {:>6.2}s of {:>3}s] {verdict}",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bs(g: &Graph) -> BuildingSet {
    BuildingSet::from_graph(g).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn master_oracle() -> Result<String, String> {
    let engine = FaceEngine::default();
    let ranges = [
        // Pe^n sits at x^{n+1}
        (Family::Pe, 8),
        (Family::St, 7),
        (Family::NablaBecause, 7),
        (Family::BecauseBecause, 7),
    ];
    let mut checked = 0;
    for (fam, max_total) in ranges {
        let series = family_f(fam, 8).map_err(|e| e.to_string())?;
        for (k, l) in fam.indices(max_total) {
            let series_poly = coeff_normalized(&series, fam, k, l).map_err(|e| e.to_string())?;
            let recursion = engine.fpoly_graph(&fam.graph(k, l).unwrap()).map_err(|e| e.to_string())?;
            ensure(series_poly == recursion, || format!("{fam} ({k}, {l}): {series_poly} vs {recursion}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} indices"))
}

fn identities_at_eight() -> Result<String, String> {
    let report = identity_suite(8).map_err(|e| e.to_string())?;
    if let Some(f) = report.first_failure() {
        return Err(format!("{} failed at {:?}", f.id, f.mismatch.as_ref().map(|m| (m.k, m.l))));
    }
    Ok(format!("{} identities", report.outcomes.len()))
}

fn gal_scan() -> Result<String, String> {
    let engine = FaceEngine::default();
    let mut graphs = Vec::new();
    for m in 1..=6 {
        for n in 1..=7 - m {
            graphs.push((format!("K_{{{m},{n}}}"), Graph::bipartite(m, n)));
        }
    }
    for n in 0..=7 {
        graphs.push((format!("Pe^{n}"), pe(n)));
        graphs.push((format!("St^{n}"), st(n)));
    }
    for (name, g) in &graphs {
        let b = bs(g);
        let h = engine.fpoly(&b).subst_h();
        match gal_check_poly(&h, b.dimension() as u32).map_err(|e| format!("{name}: {e}"))? {
            GalVerdict::Pass(_) => {}
            GalVerdict::Fail { index, value, .. } => return Err(format!("{name}: gamma_{index} = {value}")),
        }
    }
    Ok(format!("{} polytopes", graphs.len()))
}

fn spot_values() -> Result<String, String> {
    let engine = FaceEngine::default();
    let st = family_f(Family::St, 3).map_err(|e| e.to_string())?;
    let pe = family_f(Family::Pe, 3).map_err(|e| e.to_string())?;
    let from_series =
        |s, fam, k, n: u32| nestohedra::invariants::fvector_of(&coeff_normalized(s, fam, k, 0).unwrap(), n);

    let path3 = fvector(&engine, &bs(&Graph::path(3)));
    ensure(path3 == ints(&[5, 5, 1]) && path3 == from_series(&st, Family::St, 2, 2), || format!("path 3: {path3:?}"))?;

    let k3 = bs(&Graph::complete(3));
    let f = fvector(&engine, &k3);
    ensure(f == ints(&[6, 6, 1]) && f == from_series(&pe, Family::Pe, 3, 2), || format!("complete 3: {f:?}"))?;
    let g = gamma(&engine, &k3).map_err(|e| e.to_string())?;
    ensure(g.gammas() == [rat(1), rat(2)], || format!("complete 3 gamma: {g:?}"))?;

    let edge = bs(&Graph::complete(2));
    let f = fvector(&engine, &edge);
    ensure(f == ints(&[2, 1]) && f == from_series(&pe, Family::Pe, 2, 1), || format!("edge: {f:?}"))?;
    let g = gamma(&engine, &edge).map_err(|e| e.to_string())?;
    ensure(g.gammas() == [rat(1)], || format!("edge gamma: {g:?}"))?;

    let k22 = Graph::bipartite(2, 2);
    let facets = fvector(&engine, &bs(&k22))[2].clone();
    let oracle = connected_subset_count(&k22) - 1;
    ensure(facets == BigInt::from(12) && facets == BigInt::from(oracle), || format!("K_{{2,2}} facets: {facets}"))?;
    Ok("path 3, complete 3, edge, K_{2,2}".into())
}

fn structure() -> Result<String, String> {
    let engine = FaceEngine::default();
    let mut graphs = 0;
    for n in 1..=6 {
        for g in labelled_graphs(n).filter(Graph::is_connected) {
            let b = bs(&g);
            let spec = g.to_spec();
            if n > 1 {
                let via_graph = boundary_graph(&g).map_err(|e| e.to_string())?;
                let via_sets = boundary(&b).map_err(|e| e.to_string())?;
                ensure(via_graph == via_sets, || format!("{spec}: boundary_graph differs"))?;
                ensure(via_sets.total_coefficient() == rat(b.len() as i64 - 1), || format!("{spec}: facet count"))?;
            }
            let f = fvector(&engine, &b);
            ensure(f[b.dimension().saturating_sub(1)] == BigInt::from(b.len() - 1) || n == 1, || {
                format!("{spec}: f_(n-1) = {} but |B| - 1 = {}", f[b.dimension() - 1], b.len() - 1)
            })?;
            ensure(dehn_sommerville(&engine, &b), || format!("{spec}: h not symmetric"))?;
            ensure(euler_holds(&f), || format!("{spec}: Euler relation fails for {f:?}"))?;
            graphs += 1;
        }
    }
    Ok(format!("{graphs} labelled graphs"))
}

fn d_formulas() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=6 {
        let d = boundary_graph(&pe(n)).map_err(|e| e.to_string())?.to_isomorphism_classes();
        ensure(d == d_permutohedron(n), || format!("d Pe^{n}"))?;
        let d = boundary_graph(&st(n)).map_err(|e| e.to_string())?.to_isomorphism_classes();
        ensure(d == d_stellohedron(n), || format!("d St^{n}"))?;
        checked += 2;
    }
    for s in 2..=5 {
        for t in 2..=7 - s {
            let d = boundary_graph(&Graph::bipartite(s, t)).map_err(|e| e.to_string())?.to_isomorphism_classes();
            ensure(d == d_bipartite(s, t), || format!("d K_{{{s},{t}}}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} boundaries"))
}

fn negative_controls() -> Result<String, String> {
    let mut bundle = SeriesBundle::compute(8).map_err(|e| e.to_string())?;
    bundle.pe_f.remove_coeff(3, 0);
    let report = check_identities(&bundle);
    let fail = report.first_failure().ok_or("corrupted series passed")?;
    let m = fail.mismatch.as_ref().ok_or("no located index")?;
    ensure(fail.id == "I1" && (m.k, m.l) == (3, 0), || format!("{} at ({}, {})", fail.id, m.k, m.l))?;

    let g = gamma_extract(&Poly2::from_int_terms([(2, 0, 1), (0, 2, 1)])).map_err(|e| e.to_string())?;
    ensure(g.gammas() == [rat(1), rat(-2)], || format!("alpha^2 + t^2: {g:?}"))?;

    let cases: [(&[&str], i32); 6] = [
        (&["invariants", "--graph", "complete:3"], 0),
        (&["identities", "--order", "4"], 0),
        (&["identities", "--order", "4", "--corrupt"], 1),
        (&["identities", "--order", "1"], 2),
        (&["verify", "--family", "pe", "--max-order", "99"], 2),
        (&["gal-scan", "--bound", "0"], 2),
    ];
    for (args, expected) in cases {
        let status = Command::new(env!("CARGO_BIN_EXE_nesto")).args(args).output().map_err(|e| e.to_string())?.status;
        ensure(status.code() == Some(expected), || format!("nesto {}: {status}", args.join(" ")))?;
    }
    Ok(format!("I1 at (3, 0), gamma_1 = -2, {} exit codes", cases.len()))
}
