#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::{Command, Output};

use krcrystal::crystal::{CrystalGraph, GenOptions};
use krcrystal::kr_a::TypeA;
use krcrystal::rsk::BiMatrix;
use krcrystal::suites::{FamilyName, Instance};

fn krcrystal(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krcrystal")).args(args.split_whitespace()).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn vertex_count(args: &str) -> usize {
    let out = krcrystal(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
        .lines()
        .find_map(|l| l.strip_prefix("vertices: "))
        .and_then(|v| v.parse().ok())
        .expect("summary has a vertex line")
}

#[test]
fn gen_counts_match_the_fillings() {
    assert_eq!(vertex_count("gen --family A --n 4 --r 2 --s 2"), common::count_fillings(&[2, 2], 4));
    assert_eq!(vertex_count("gen --family C --n 2 --s 2"), common::stretched_fillings(2, 2, 2));
    assert_eq!(vertex_count("gen --family D1 --n 4 --r 4 --s 2"), common::parity_fillings(4, 2, true));
}

#[test]
fn dot_output_lists_every_vertex() {
    let out = krcrystal("gen --family A --n 4 --r 2 --s 2 --format dot");
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.lines().filter(|l| l.contains("[label=\"")).count(), common::count_fillings(&[2, 2], 4));
}

#[test]
fn summary_reports_one_classical_component_for_type_a() {
    let text = stdout(&krcrystal("gen --family A --n 4 --r 2 --s 2"));
    assert!(text.contains("classical highest weight vertices: 1"));
    assert!(text.contains("color 0: 10"));
}

#[test]
fn json_export_round_trips() {
    let path = std::env::temp_dir().join(format!("krcrystal-cli-{}.json", std::process::id()));
    let out = krcrystal(&format!("gen --family D1 --n 4 --r 3 --s 2 --format json --out {}", path.display()));
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let back = CrystalGraph::from_json(&text).unwrap();
    let direct = Instance::new(FamilyName::D1, 4, Some(3), 2).unwrap().graph(GenOptions::default()).unwrap();
    assert_eq!(back.vertices, direct.vertices);
    assert_eq!(back.edges, direct.edges);
    assert_eq!(back.to_json(), text);
}

#[test]
fn verify_passes_and_exits_zero() {
    for args in [
        "verify --family A --n 4 --r 2 --s 2 --suite iso-promotion",
        "verify --family D1 --n 4 --r 4 --s 1 --suite oracle-spin",
        "verify --family C --n 2 --s 1 --suite axioms --suite strings",
    ] {
        let out = krcrystal(args);
        assert!(out.status.success(), "{args}");
        let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(report["passed"], true);
        assert!(report["suites"].as_array().unwrap().iter().all(|s| s["report"]["violations"].as_array().unwrap().is_empty()));
    }
}

#[test]
fn inapplicable_suite_and_bad_parameters_fail() {
    assert!(!krcrystal("verify --family C --n 2 --s 1 --suite oracle-spin").status.success());
    assert!(!krcrystal("gen --family A --n 4 --s 2").status.success());
    assert!(!krcrystal("gen --family D1 --n 4 --r 2 --s 1").status.success());
    assert!(!krcrystal("gen --family A --n 5 --r 2 --s 3 --budget 10").status.success());
}

#[test]
fn rsk_prints_the_rectified_pair() {
    let m = ["rsk", "--matrix", "1 0 1 / 2 1 0 / 0 2 0"];
    let run = |extra: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_krcrystal")).args(m).args(extra).output().unwrap();
        stdout(&out)
    };
    let se = run(&[]);
    assert!(se.contains("P: . -3 -2 -2 / -3 -2 -1 -1"));
    assert!(se.contains("Q: . 4 4 4 / 5 5 5 6"));
    let nw = run(&["--corner", "nw"]);
    assert!(nw.contains("P: -3 -3 -2 -2 / -2 -1 -1"));
    assert!(nw.contains("Q: 4 4 4 6 / 5 5 5"));
    let a = TypeA::new(6, 3).unwrap();
    let parsed = BiMatrix::parse(a.row_alphabet(), a.col_alphabet(), m[2]).unwrap();
    let ell = common::longest_decreasing_by_subsets(&parsed.a_word());
    assert!(se.contains(&format!("ell: {ell}")) && nw.contains(&format!("ell: {ell}")));
}

#[test]
fn rsk_of_the_zero_matrix_is_empty() {
    let out = Command::new(env!("CARGO_BIN_EXE_krcrystal")).args(["rsk", "--matrix", "0 0 0"]).output().unwrap();
    assert_eq!(stdout(&out), "P: \nQ: \nell: 0\n");
    let path = std::env::temp_dir().join(format!("krcrystal-zero-{}.txt", std::process::id()));
    std::fs::write(&path, "0 0\n0 0\n").unwrap();
    let from_file = stdout(&krcrystal(&format!("rsk --input {}", path.display())));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(from_file, "P: \nQ: \nell: 0\n");
}

#[test]
fn count_agrees_with_the_tableau_description() {
    let out = krcrystal("count --family Dtwisted --n 3 --s 1");
    assert!(out.status.success());
    assert!(stdout(&out).contains(&format!("generated: {}", common::stretched_fillings(3, 1, 1))));
}
