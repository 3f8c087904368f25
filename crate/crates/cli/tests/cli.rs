//! End-to-end tests of the `nesto` binary: output shapes, exit codes, and
//! determinism of the JSON output.

use std::io::Write;
use std::process::{Command, Output};
use tempfile::NamedTempFile;

fn nesto(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nesto"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_graph(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().expect("temp file");
    f.write_all(text.as_bytes()).expect("write");
    f
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gamma_both_engines_on_path3() {
    let f = write_graph("3 2\n1 2\n2 3\n");
    let out = nesto(&["gamma", "--graph", f.path().to_str().unwrap(), "--engine", "both"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "gamma = [1, 1]; engines agree");
}

#[test]
fn gamma_json_is_deterministic() {
    let f = write_graph("4 3\n1 2\n2 3\n3 4\n");
    let args = ["gamma", "--graph", f.path().to_str().unwrap(), "--format", "json"];
    let a = nesto(&args);
    let b = nesto(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(v["gamma"], serde_json::json!([1, 3]));
    assert_eq!(v["agree"], serde_json::json!(true));
}

#[test]
fn wiener_path4() {
    let f = write_graph("4 3\n1 2\n2 3\n3 4\n");
    let out = nesto(&["wiener", "--graph", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "10");
}

#[test]
fn poset_dot_has_eleven_nodes_in_five_ranks() {
    let out = nesto(&["poset", "--n", "7", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("label=").count(), 11);
    assert_eq!(text.matches("rank=same").count(), 5);
    assert!(text.contains("style=dashed"), "flossing edges present");
}

#[test]
fn poset_parallel_matches_serial() {
    let serial = nesto(&["poset", "--n", "6", "--format", "json"]);
    let parallel = nesto(&["poset", "--n", "6", "--format", "json", "--jobs", "0"]);
    assert!(serial.status.success() && parallel.status.success());
    assert_eq!(stdout(&serial), stdout(&parallel));
}

#[test]
fn buildset_json_round_trips_through_gamma() {
    let f = write_graph("3 3\n1 2\n1 3\n2 3\n");
    let out = nesto(&["buildset", "--graph", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let mut j = NamedTempFile::new().unwrap();
    j.write_all(stdout(&out).trim().as_bytes()).unwrap();
    let gamma = nesto(&["gamma", "--buildset", j.path().to_str().unwrap()]);
    assert!(gamma.status.success());
    assert_eq!(stdout(&gamma).trim(), "gamma = [1, 2]; engines agree");
}

#[test]
fn moves_output_lists_both_kinds() {
    // spider with legs 2, 2, 1
    let f = write_graph("6 5\n1 2\n2 3\n1 4\n4 5\n1 6\n");
    let out = nesto(&["moves", "--graph", f.path().to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let kinds: Vec<&str> =
        v.as_array().unwrap().iter().map(|r| r["kind"].as_str().unwrap()).collect();
    assert!(kinds.contains(&"tree_shift"));
    assert!(kinds.contains(&"flossing"));
}

#[test]
fn parse_error_exit_code() {
    let f = write_graph("2 1\n1 1\n");
    let out = nesto(&["wiener", "--graph", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn cap_exit_code_and_override() {
    // a path on 11 vertices trips the desk-scale cap
    let edges: Vec<String> = (1..11).map(|v| format!("{v} {}", v + 1)).collect();
    let f = write_graph(&format!("11 10\n{}\n", edges.join("\n")));
    let out = nesto(&["gamma", "--graph", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let out = nesto(&[
        "gamma",
        "--graph",
        f.path().to_str().unwrap(),
        "--override-cap",
        "--engine",
        "incremental",
    ]);
    assert!(out.status.success());
}

#[test]
fn verify_single_criterion() {
    let out = nesto(&["verify", "--criteria", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("criterion 2 [PASS]"));
    assert!(text.contains("all 1 criteria passed"));
}

#[test]
fn domain_error_exit_code() {
    // disconnected graph has no Wiener index
    let f = write_graph("4 1\n1 2\n");
    let out = nesto(&["wiener", "--graph", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(7));
}

#[test]
fn missing_input_is_a_usage_style_error() {
    let out = nesto(&["gamma"]);
    assert_eq!(out.status.code(), Some(3), "no input file given");
}
