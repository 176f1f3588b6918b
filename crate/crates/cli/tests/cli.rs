use std::process::Command;

use clap::Parser;
use serde_json::Value;
use stabctx::cli::{run, Cli};
use stabctx::dimacs::parse_dimacs;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stabctx"))
}

fn run_args(args: &[&str]) -> String {
    let cli = Cli::try_parse_from(std::iter::once("stabctx").chain(args.iter().copied())).unwrap();
    run(&cli).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&run_args(&all)).unwrap()
}

fn field<'a>(v: &'a Value, name: &str) -> &'a Value {
    v["fields"].as_array().unwrap().iter().find(|f| f["name"] == name).unwrap_or_else(|| panic!("no field {name}"))
}

#[test]
fn counts_for_small_dimensions() {
    for (d, want) in [("2", [36, 24, 60]), ("3", [144, 216, 360]), ("5", [900, 3000, 3900])] {
        let v = json(&["counts", "-d", d]);
        assert_eq!(v["schema_version"], 1);
        for (name, n) in ["sep", "ent", "tot"].iter().zip(want) {
            assert_eq!(field(&v, name)["value"], n);
            assert_eq!(field(&v, name)["status"], "exact");
        }
    }
}

#[test]
fn invariants_examples() {
    let v = json(&["invariants", "-d", "2", "--family", "ent"]);
    assert_eq!(field(&v, "alpha")["value"], 5);
    assert_eq!(field(&v, "clique_cover")["value"], 6);
    assert_eq!(field(&v, "chi")["value"], 5);
    assert_eq!(field(&v, "sic_alpha_below_cover")["value"], true);
    assert_eq!(field(&v, "sic_chi_exceeds_dim")["value"], true);

    let v = json(&["invariants", "-d", "3", "--family", "sep"]);
    assert_eq!(field(&v, "alpha")["value"], 16);
    assert_eq!(field(&v, "clique_cover")["value"], 16);
    assert_eq!(field(&v, "sic_alpha_below_cover")["value"], false);

    let v = json(&["invariants", "-d", "3", "--family", "ent"]);
    assert_eq!(field(&v, "chi")["value"], 9);
    assert_eq!(field(&v, "normal_cayley_verified")["value"], true);
    assert_eq!(field(&v, "sic_chi_exceeds_dim")["value"], false);
}

#[test]
fn chsh_row() {
    let v = json(&["chsh", "-d", "3", "--tolerance", "1e-4"]);
    assert_eq!(field(&v, "vertices")["value"], 27);
    assert_eq!(field(&v, "regular_degree")["value"], 10);
    assert_eq!(field(&v, "alpha")["value"], 6);
    let lm = field(&v, "lambda_max")["value"].as_f64().unwrap();
    assert!((lm - 6.412).abs() < 1e-3);
    let th = field(&v, "theta")["value"].as_f64().unwrap();
    assert!((th - 7.098).abs() < 1e-3);
    assert_eq!(field(&v, "odd_cycle_k_range")["value"], "2..4");
}

#[test]
fn every_field_has_a_status() {
    for args in [vec!["pm"], vec!["kcbs"], vec!["alt-chsh"], vec!["chsh", "-d", "2"], vec!["invariants", "-d", "2", "--family", "tot"]] {
        let v = json(&args);
        for f in v["fields"].as_array().unwrap() {
            let s = f["status"].as_str().unwrap();
            assert!(["exact", "tolerance", "bound", "skipped"].contains(&s), "{f}");
        }
    }
}

#[test]
fn output_is_deterministic_and_independent_of_jobs() {
    let a = run_args(&["invariants", "-d", "3", "--family", "tot", "--format", "json", "--jobs", "1"]);
    let b = run_args(&["invariants", "-d", "3", "--family", "tot", "--format", "json", "--jobs", "5"]);
    assert_eq!(a, b);
    let c = run_args(&["chsh", "-d", "3", "--format", "csv", "--seed", "9"]);
    let d = run_args(&["chsh", "-d", "3", "--format", "csv", "--seed", "9"]);
    assert_eq!(c, d);
}

#[test]
fn export_chsh_qubit_dimacs() {
    let text = run_args(&["export", "--graph", "chsh", "-d", "2", "--format", "dimacs"]);
    assert!(text.contains("p edge 8 12"));
    let g = parse_dimacs(&text).unwrap();
    assert_eq!((g.n(), g.edge_count()), (8, 12));
    assert_eq!(g.regular_degree(), Some(3));
}

#[test]
fn export_then_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pm.dimacs");
    let status = bin()
        .args(["export", "--graph", "pm", "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    let out = bin().arg("graph").arg(&path).args(["--format", "json"]).output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(field(&v, "vertices")["value"], 24);
    assert_eq!(field(&v, "alpha")["value"], 5);
}

#[test]
fn json_export_lists_edges() {
    let v: Value = serde_json::from_str(&run_args(&["export", "--graph", "kcbs", "--format", "json"])).unwrap();
    assert_eq!(v["vertices"], 5);
    assert_eq!(v["edges"].as_array().unwrap().len(), 5);
}

#[test]
fn invalid_input_exits_nonzero() {
    for args in [
        vec!["counts", "-d", "4"],
        vec!["counts", "--tolerance", "0.5"],
        vec!["counts", "--budget-seconds", "0"],
        vec!["chsh", "-d", "11"],
        vec!["pm", "--format", "dimacs"],
        vec!["nonsense"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert!(!out.status.success(), "{args:?}");
    }
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.dimacs");
    std::fs::write(&bad, "p edge 2 1\ne 1 5\n").unwrap();
    assert!(!bin().arg("graph").arg(&bad).output().unwrap().status.success());
}

#[test]
fn exhausted_budget_is_in_band() {
    // a one-second budget on d = 7 cannot prove alpha, but the run succeeds
    let out = bin()
        .args(["chsh", "-d", "7", "--budget-seconds", "1", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(field(&v, "alpha")["status"], "bound");
    assert_eq!(field(&v, "theta")["status"], "skipped");
    assert_eq!(field(&v, "vertices")["value"], 343);
}
