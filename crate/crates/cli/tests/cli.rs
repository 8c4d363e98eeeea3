use std::io::Write;
use std::process::{Command, Output, Stdio};

use kdefect::engine::DefectTable;
use kdefect::families::all_labeled_graphs;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kdefect")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kdefect"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn cycle_table_json() {
    let o = run(&["table", "--family", "cycle:5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let t: DefectTable = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(t.numbers(), vec![3, 2, 3, 2, 0, 1]);
    assert!(t.is_normalized());
}

#[test]
fn wheel_number() {
    let o = run(&["number", "--family", "wheel:5", "--k", "6"]);
    assert_eq!(stdout(&o).trim(), "0");
    let o = run(&["number", "--family", "wheel:5", "--k", "6", "--no-cache"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn latex_polynomial() {
    let o = run(&["poly", "--family", "cycle:4", "--k", "1", "--engine", "flats", "--format", "latex"]);
    assert_eq!(stdout(&o).trim(), "4\\lambda^{3} - 12\\lambda^{2} + 8\\lambda");
}

#[test]
fn value_at_lambda_matches_brute_force() {
    let dc = run(&["poly", "--family", "wheel:6", "--k", "3", "--lambda", "3"]);
    let brute = run(&["poly", "--family", "wheel:6", "--k", "3", "--lambda", "3", "--engine", "brute"]);
    assert_eq!(stdout(&dc), stdout(&brute));
}

#[test]
fn witness_schema() {
    let o = run(&["witness", "--family", "cycle:5", "--k", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 4);
    assert!(stdout(&o).trim_start().starts_with("{\n  \"k\": 2,\n  \"colors\": 3"));
    assert_eq!(v["bad_edges"].as_array().unwrap().len(), 2);
    let none = run(&["witness", "--family", "cycle:5", "--k", "4"]);
    assert_eq!(stdout(&none).trim(), "null");
}

#[test]
fn graph6_and_edge_list_inputs() {
    let g6 = run_stdin(&["table", "--input", "-", "--format", "csv"], "Dhc\n");
    let el = run(&["table", "--family", "cycle:5", "--format", "csv"]);
    assert_eq!(g6.status.code(), Some(0));
    assert_eq!(stdout(&g6), stdout(&el));
}

#[test]
fn engine_variants_agree() {
    let mut graphs = all_labeled_graphs(4);
    graphs.extend(all_labeled_graphs(5).into_iter().step_by(41));
    for g in graphs {
        let text = g.to_edge_list();
        for k in 0..=g.m() {
            let ks = k.to_string();
            let outs: Vec<String> = ["dc", "subset", "flats"]
                .iter()
                .map(|e| stdout(&run_stdin(&["poly", "--input", "-", "--k", &ks, "--engine", e], &text)))
                .collect();
            assert!(outs.iter().all(|o| *o == outs[0]), "{} k={k}", g.compact());
        }
    }
}

#[test]
fn exit_codes() {
    let bad = run_stdin(&["table", "--input", "-"], "n 3\ne 0 1\ne 1 x\n");
    assert_eq!(bad.status.code(), Some(1));
    assert!(stderr(&bad).contains("line 3"));

    let strict = run_stdin(&["table", "--input", "-", "--strict"], "n 2\ne 0 1\ne 0 1\n");
    assert_eq!(strict.status.code(), Some(1));

    let guard = run(&["table", "--family", "complete:9"]);
    assert_eq!(guard.status.code(), Some(1));
    assert!(stderr(&guard).contains("dc-edges"));

    assert_eq!(run(&["table"]).status.code(), Some(1));
    assert_eq!(run(&["poly", "--family", "cycle:4"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["table", "--family", "wheel:3"]).status.code(), Some(1));

    assert_eq!(run(&["verify", "--claim", "C1", "--family", "allgraphs:4"]).status.code(), Some(0));
    let failing = run(&["verify", "--claim", "C14", "--family", "alltrees:4"]);
    assert_eq!(failing.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_str(&stdout(&failing)).unwrap();
    assert_eq!(report["outcome"], "counterexamples");
    assert_eq!(report["failures"], 16);
}

#[test]
fn family_and_bench_csv() {
    let text = stdout(&run(&["family", "--family", "wheel:4..5", "--format", "csv"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,n,m,edges");
    assert!(lines[1].starts_with("wheel:4,4,6,"));
    assert_eq!(lines.len(), 3);

    let text = stdout(&run(&["bench", "--family", "allgraphs:3", "--engine", "dc,subset"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,engine,instances,ms,cache_hits,cache_misses");
    assert!(lines[1].starts_with("allgraphs:3,dc,8,"));
    assert!(lines[2].starts_with("allgraphs:3,subset,8,"));
}

#[test]
fn flats_listing() {
    let o = run(&["flats", "--family", "complete:4", "--k", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
}
