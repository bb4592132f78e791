use std::process::{Command, Output};

use serde_json::{json, Value};

fn corona(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corona"))
        .args(args)
        .env_remove("CORONA_ORACLE_LIMIT")
        .env_remove("CORONA_THEOREM_LIMIT")
        .output()
        .expect("binary runs")
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

const K1_K2: &str = r#"{"base":{"gen":"complete","n":1},"copies":[{"h":{"gen":"complete","n":2},"t":"all"}]}"#;

#[test]
fn charpoly_with_oracle_and_roots() {
    let o = corona(&["charpoly", K1_K2, "--matrix", "adjacency", "--oracle", "--roots"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_out(&o);
    assert_eq!(v["theorem"], json!(["-2", "-3", "0", "1"]));
    assert_eq!(v["oracle"], v["theorem"]);
    assert_eq!(v["verdict"], "match");
    assert_eq!(v["roots"], json!([{"value": -1.0, "mult": 2}, {"value": 2.0, "mult": 1}]));
}

#[test]
fn charpoly_without_oracle_is_unchecked() {
    let v = json_out(&corona(&["charpoly", K1_K2, "--matrix", "L"]));
    assert_eq!(v["oracle"], Value::Null);
    assert_eq!(v["verdict"], "unchecked");
    assert_eq!(v["theorem"], json!(["0", "9", "-6", "1"]));
}

#[test]
fn coronal_of_k4() {
    let o = corona(&["coronal", r#"{"gen":"complete","n":4}"#, "--alpha", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_out(&o), json!({"num": ["-2", "2"], "den": ["-3", "-2", "1"]}));
    let generic = corona(&["coronal", "[[0,1,1,1],[1,0,1,1],[1,1,0,1],[1,1,1,0]]", "--alpha", "0,1", "--fast-path", "generic"]);
    assert_eq!(json_out(&generic), json_out(&o));
}

#[test]
fn verify_small_suite() {
    let o = corona(&["verify", "--suite", "small"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_out(&o);
    assert_eq!(v["passed"], true);
    assert!(v["cases"].as_u64().unwrap() >= 90);
}

#[test]
fn cluster_is_p6() {
    let k2 = r#"{"gen":"complete","n":2}"#;
    let v = json_out(&corona(&["cluster", k2, k2, "--root", "0"]));
    assert_eq!(v["adjacency"], json!(["-1", "0", "6", "0", "-5", "0", "1"]));
    assert_eq!(v["laplacian"], json!(["0", "-6", "35", "-56", "36", "-10", "1"]));
}

#[test]
fn cospectral_rooted_copies() {
    let spec = r#"{"base":{"gen":"path","n":3},"copies":[
        {"h":{"n":2,"edges":[[0,1]],"root":0},"t":"root"},
        {"h":{"n":2,"edges":[[0,1]],"root":0},"t":"root"},
        {"h":{"n":2,"edges":[[0,1]],"root":0},"t":"root"}]}"#;
    for m in ["A", "L"] {
        let o = corona(&["cospectral", spec, "--matrix", m]);
        assert_eq!(o.status.code(), Some(0));
        let v = json_out(&o);
        assert_eq!(v["permutations"].as_array().unwrap().len(), 6);
        assert_eq!(v["all_equal"], true);
        assert_eq!(v["family"].as_array().unwrap().len(), 6);
    }
}

#[test]
fn table_check_reports_row_17() {
    let o = corona(&["table-check", "--base", "cycle:4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_out(&o);
    let mismatches = v["mismatches"].as_array().unwrap();
    assert_eq!(mismatches.len(), 1);
    assert_eq!(mismatches[0]["row"], 17);
    assert_eq!(mismatches[0]["subset"], "V");
    assert!(v["notes"].as_array().unwrap().iter().any(|n| n.as_str().unwrap().contains("m'")));
    let one = json_out(&corona(&["table-check", "--base", "complete:4", "--op", "subdivision"]));
    assert_eq!(one["lines"].as_array().unwrap().len(), 3);
}

#[test]
fn build_from_file_to_output() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(&spec, K1_K2).unwrap();
    let out = dir.path().join("g.json");
    let o = corona(&["build", spec.to_str().unwrap(), "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let g: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(g["n"], 3);
    assert_eq!(g["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn exit_codes() {
    assert_eq!(corona(&["charpoly", r#"{"base":"#]).status.code(), Some(2));
    assert_eq!(corona(&["build", "/nonexistent/spec.json"]).status.code(), Some(2));
    let unequal = r#"{"base":{"gen":"complete","n":2},"copies":[{"h":{"gen":"cycle","n":4},"t":"all"},{"h":{"gen":"complete","n":2},"t":"all"}]}"#;
    assert_eq!(corona(&["cospectral", unequal]).status.code(), Some(3));
    let big = r#"{"base":{"gen":"complete","n":3},"copies":[{"h":{"gen":"cycle","n":30},"t":"all"},{"h":{"gen":"cycle","n":30},"t":"all"},{"h":{"gen":"cycle","n":30},"t":"all"}]}"#;
    assert_eq!(corona(&["charpoly", big, "--oracle"]).status.code(), Some(4));
    assert_eq!(corona(&["build", big, "--theorem-limit", "10"]).status.code(), Some(4));
}

#[test]
fn env_overrides_limits() {
    let spec = r#"{"base":{"gen":"complete","n":2},"copies":[{"h":{"gen":"cycle","n":3},"t":"all"},{"h":{"gen":"cycle","n":3},"t":"all"}]}"#;
    let o = Command::new(env!("CARGO_BIN_EXE_corona"))
        .args(["charpoly", spec, "--oracle"])
        .env("CORONA_ORACLE_LIMIT", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    let o = Command::new(env!("CARGO_BIN_EXE_corona"))
        .args(["charpoly", spec, "--oracle", "--oracle-limit", "8"])
        .env("CORONA_ORACLE_LIMIT", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let a = corona(&["verify", "--suite", "small"]).stdout;
    let b = corona(&["verify", "--suite", "small", "--sequential"]).stdout;
    assert_eq!(a, b);
}
