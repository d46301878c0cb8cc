use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffspin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_dump_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = run(&["build", "3", "1", "--dump", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(doc["gammas"].as_array().unwrap().len(), 4);
    assert_eq!(doc["p"], 3);
    assert_eq!(doc["q"], 1);
    let d = doc["dimS"].as_u64().unwrap() as usize;
    assert_eq!(doc["canonicalForm"].as_array().unwrap().len(), d);
}

#[test]
fn build_split_m1_to_stdout() {
    let o = run(&["build", "1", "1", "--dump", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let want = serde_json::json!([
        [["0/1", "-1/1"], ["1/1", "0/1"]],
        [["0/1", "1/1"], ["1/1", "0/1"]]
    ]);
    assert_eq!(doc["gammas"], want);
    assert!(doc.get("grading").is_some());
}

#[test]
fn build_rejects_empty_signature() {
    assert_eq!(run(&["build", "0", "0"]).status.code(), Some(2));
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--kind", "triples"]).status.code(), Some(2));
}

#[test]
fn pair_table_contains_known_cell() {
    let o = run(&[
        "table", "--max-n", "8", "--kind", "pairs", "--format", "machine",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let cell = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .find(|c| c["n"] == 2 && c["s"] == 2)
        .unwrap();
    assert_eq!(cell["counts"], serde_json::json!([6, 2]));
}

#[test]
fn quadruple_grid_contains_known_value() {
    let o = run(&["table", "--max-n", "8", "--kind", "quadruples"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2,1,0,1"));
}

#[test]
fn complex_table() {
    let o = run(&[
        "--threads",
        "2",
        "table",
        "--kind",
        "complex",
        "--max-n",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2,0,0,0"));
}

#[test]
fn verify_jacobi_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&[
        "verify",
        "--suite",
        "jacobi",
        "--max-n",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(report["pass"], true);
}

#[test]
fn verify_golden_table_suite_passes() {
    let o = run(&["verify", "--suite", "paper", "--max-n", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_oracle_suite_passes() {
    let o = run(&["verify", "--suite", "oracle", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn bracket_lists_basis_and_checks_jacobi() {
    let o = run(&["bracket", "1", "1", "--epsilon", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["basis"].as_array().unwrap().len(), 2);

    let o = run(&["bracket", "1", "1", "--epsilon", "1", "--coeffs", "3,-2/5"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["jacobi"]["failures"], 0);
    assert_eq!(doc["equivariant"], true);
    assert_eq!(doc["pi"].as_array().unwrap().len(), 2);
}

#[test]
fn bracket_with_wrong_coefficient_count() {
    assert_eq!(
        run(&["bracket", "0", "1", "--epsilon", "-1", "--coeffs", "1"])
            .status
            .code(),
        Some(2)
    );
}
