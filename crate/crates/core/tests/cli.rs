//! End-to-end runs of the `homspace` binary.

use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homspace")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("one JSON object per line")).collect()
}

#[test]
fn complexity_of_a_registry_row() {
    let o = run(&["complexity", "--pair", "T2:14", "--output", "json-lines"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let lines = json_lines(&o);
    let reports: Vec<&Value> = lines.iter().filter(|v| v.get("complexity").is_some()).collect();
    assert_eq!(reports.len(), 2);
    for r in reports {
        assert_eq!(r["complexity"], 1);
        assert_eq!(r["schema"], 1);
    }
}

#[test]
fn inline_pair_by_the_oracle() {
    let o = run(&["complexity", "--pair", "sl3|h=so3", "--method", "oracle"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("c = 0"), "{}", stdout(&o));
}

#[test]
fn seed_does_not_change_the_answer() {
    let a = run(&["--seed", "7", "complexity", "--pair", "T1:19", "--output", "json-lines"]);
    let b = run(&["--seed", "11", "complexity", "--pair", "T1:19", "--output", "json-lines"]);
    let c = |o: &Output| json_lines(o).iter().filter_map(|v| v["complexity"].as_u64()).collect::<Vec<_>>();
    assert_eq!(c(&a), c(&b));
}

#[test]
fn csv_has_a_header() {
    let o = run(&["ssgp", "--pair", "T1:16[n=2,m=1]", "--output", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert!(!rdr.headers().unwrap().is_empty());
    assert!(rdr.records().next().is_some());
}

#[test]
fn verify_a_table_slice() {
    let o = run(&["verify-tables", "--table", "T3", "--smallest", "1"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn registry_check_passes() {
    let o = run(&["registry-check", "--output", "json-lines"]);
    assert!(o.status.success());
    assert!(json_lines(&o).iter().all(|v| v["status"] != "error"));
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(run(&["complexity", "--pair", "xx7"]).status.code(), Some(2));
    assert_eq!(run(&["complexity", "--pair", "T4:8[n=0,m=2]"]).status.code(), Some(2));
    assert_eq!(run(&["--trials", "0", "complexity", "--pair", "T1:1"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}
