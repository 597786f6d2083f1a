use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn nesto(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nesto")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn invariants_json() {
    let o = nesto(&["invariants", "--graph", "bipartite:2,2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["facets"], 12);
    assert_eq!(v["building_set_size"], 13);
    assert_eq!(v["fvector"], serde_json::json!([20, 30, 12, 1]));

    let v = json(&nesto(&["invariants", "--graph", "complete:3"]));
    assert_eq!(v["fvector"], serde_json::json!([6, 6, 1]));
    assert_eq!(v["gamma"], serde_json::json!(["1/1", "2/1"]));
    assert_eq!(v["hpoly"], "α^2 + 4αt + t^2");
}

#[test]
fn invariants_csv() {
    let o = nesto(&["invariants", "--graph", "edges:2:0-1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = rdr.headers().unwrap().clone();
    let row = rdr.records().next().unwrap().unwrap();
    let field = |name: &str| row[headers.iter().position(|h| h == name).unwrap()].to_string();
    assert_eq!(field("fvector"), "2;1");
    assert_eq!(field("gamma"), "1/1");
    assert_eq!(field("dimension"), "1");
}

#[test]
fn invariants_rejects_bad_graphs() {
    for spec in ["bogus", "edges:2:0-5", "complete:40", "join(complete:2"] {
        let o = nesto(&["invariants", "--graph", spec]);
        assert_eq!(o.status.code(), Some(2), "{spec}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--family", "all", "--max-order", "6"];
    let a = nesto(&args);
    let b = nesto(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(a.stdout, b.stdout);
    let c = nesto(&["gal-scan", "--family", "all", "--bound", "6", "--jobs", "1"]);
    let d = nesto(&["gal-scan", "--family", "all", "--bound", "6"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn verify_families() {
    let o = nesto(&["verify", "--family", "pe", "--max-order", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["families"][0]["checked"], 7);

    let o = nesto(&["verify", "--family", "because-because", "--max-order", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["families"][0]["family"], "because-because");

    let v = json(&nesto(&["verify", "--family", "all"]));
    assert_eq!(v["order"], 8);
    assert_eq!(v["families"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_bad_arguments() {
    assert_eq!(nesto(&["verify", "--family", "pe", "--max-order", "99"]).status.code(), Some(2));
    assert_eq!(nesto(&["verify", "--family", "cube"]).status.code(), Some(2));
    assert_eq!(nesto(&["verify"]).status.code(), Some(2));
}

#[test]
fn identities_command() {
    let o = nesto(&["identities", "--order", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let outcomes = v["outcomes"].as_array().unwrap();
    assert_eq!(outcomes.len(), 8);
    assert!(outcomes.iter().all(|o| o["passed"] == true));

    assert_eq!(nesto(&["identities", "--order", "1"]).status.code(), Some(2));
    assert_eq!(nesto(&["identities", "--order", "11"]).status.code(), Some(2));

    let o = nesto(&["identities", "--order", "5", "--corrupt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("identity I1 failed at (3, 0)"));
    assert_eq!(json(&o)["outcomes"][0]["mismatch"]["k"], 3);
}

#[test]
fn gal_scan_family() {
    let o = nesto(&["gal-scan", "--family", "because-because", "--bound", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    // (1,0), (0,1) and K_{m,n} for m, n ≥ 1, m + n ≤ 7
    assert_eq!(rows.len(), 2 + 21);
    assert!(rows.iter().all(|r| &r[6] == "true"));
    let k33 = rows.iter().find(|r| &r[1] == "3" && &r[2] == "3").unwrap();
    assert_eq!(&k33[4], "5");
}

#[test]
fn gal_scan_graph_class() {
    let o = nesto(&["gal-scan", "--graph-class", "connected", "--nodes", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
}

#[test]
fn gal_scan_bad_arguments() {
    for args in [
        &["gal-scan", "--bound", "0"][..],
        &["gal-scan", "--family", "pe", "--bound", "0"],
        &["gal-scan", "--family", "pe", "--bound", "10"],
        &["gal-scan", "--family", "pe"],
        &["gal-scan", "--graph-class", "connected", "--nodes", "8"],
        &["gal-scan", "--graph-class", "connected"],
        &["gal-scan", "--family", "pe", "--graph-class", "connected", "--nodes", "3"],
    ] {
        assert_eq!(nesto(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn config_file_and_overrides() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "order = 5\nmemo = iso\njobs = 2").unwrap();
    let path = file.path().to_str().unwrap();

    let v = json(&nesto(&["--config", path, "verify", "--family", "st"]));
    assert_eq!(v["order"], 5);
    assert_eq!(v["max_order"], 5);
    assert_eq!(nesto(&["--config", path, "verify", "--family", "st", "--max-order", "6"]).status.code(), Some(2));
    assert_eq!(json(&nesto(&["--config", path, "identities"]))["order"], 5);
    assert_eq!(json(&nesto(&["--config", path, "identities", "--order", "3"]))["order"], 3);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "speed = 11").unwrap();
    let o = nesto(&["--config", bad.path().to_str().unwrap(), "identities"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(nesto(&["--config", "/nonexistent/nesto.conf", "identities"]).status.code(), Some(2));
}

#[test]
fn iso_memo_matches_label_memo() {
    let a = nesto(&["invariants", "--graph", "bipartite:3,3"]);
    let b = nesto(&["--iso-memo", "invariants", "--graph", "bipartite:3,3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(nesto(&["--jobs", "0", "identities"]).status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let o = nesto(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("gal-scan"));
    assert_eq!(nesto(&[]).status.code(), Some(2));
}
