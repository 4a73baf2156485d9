use std::process::{Command, Output};

fn sbcw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbcw")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = sbcw(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    sbcw(args).status.code().expect("exit code")
}

#[test]
fn tree_text() {
    assert_eq!(stdout(&["tree", "cw", "--depth", "1", "--format", "text"]), "1/1\n2/1\n1/2\n");
    assert_eq!(stdout(&["tree", "sb", "--depth", "0"]), "1/1\n");
}

#[test]
fn tree_json() {
    let out = stdout(&["tree", "ivec-init", "--depth", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let values: Vec<_> = v["nodes"].as_array().unwrap().iter().map(|n| n["value"].clone()).collect();
    assert_eq!(values, vec![serde_json::json!([0, 0, 1]), serde_json::json!([2, 0, 1]), serde_json::json!([0, 2, 1])]);
    assert_eq!(v["kind"], "ivec-init");
    assert_eq!(v["nodes"][1]["path"], "R");
    assert_eq!(v["nodes"][1]["labels"], "1");
}

#[test]
fn tree_output_is_deterministic() {
    for format in ["json", "dot", "text"] {
        let args = ["tree", "christoffel", "--depth", "5", "--format", format];
        assert_eq!(stdout(&args), stdout(&args));
    }
}

#[test]
fn tree_dot() {
    let out = stdout(&["tree", "sb", "--depth", "1", "--format", "dot"]);
    assert!(out.starts_with("digraph \"sb\" {\n"));
    assert!(out.contains("  \"R\" [label=\"2/1\"];\n"));
    assert!(out.contains("  \"\" -> \"L\" [label=\"2\"];\n"));
}

#[test]
fn tree_bad_arguments() {
    assert_eq!(code(&["tree", "oak"]), 2);
    assert_eq!(code(&["tree", "sb", "--format", "svg"]), 2);
    assert_eq!(code(&["tree", "sb", "--depth", "-1"]), 2);
    assert_eq!(code(&["tree", "sb", "--depth", "99"]), 2);
}

#[test]
fn locate() {
    assert_eq!(stdout(&["locate", "sb", "3/2"]), "path: RL\nlabels: 12\n");
    assert_eq!(stdout(&["locate", "cw", "1/1"]), "path: \nlabels: \n");
    assert_eq!(stdout(&["locate", "cw", "5/3"]), "path: RLR\nlabels: 123\n");
    assert_eq!(code(&["locate", "cw", "0/1"]), 2);
    assert_eq!(code(&["locate", "sb", "1/0"]), 2);
    assert_eq!(code(&["locate", "sb", "x"]), 2);
}

#[test]
fn word() {
    assert_eq!(stdout(&["word", "--slope", "3/5"]), "aabaabab\n");
    assert_eq!(stdout(&["word", "--slope", "1/1"]), "ab\n");
    assert_eq!(stdout(&["word", "--slope", "0/1"]), "a\n");
    assert_eq!(code(&["word", "--slope", "-1/2"]), 2);
}

#[test]
fn approx() {
    assert_eq!(stdout(&["approx", "0.5", "--max-den", "10"]), "1/2\n");
    assert_eq!(stdout(&["approx", "3.14159265358979", "--max-den", "113"]), "355/113\n");
    assert_eq!(stdout(&["approx", "0.3333334", "--max-den", "100"]), "1/3\n");
    assert_eq!(stdout(&["approx", "-0.3333334", "--max-den", "100"]), "-1/3\n");
    assert_eq!(code(&["approx", "pi", "--max-den", "10"]), 2);
    assert_eq!(code(&["approx", "1e3", "--max-den", "10"]), 2);
    assert_eq!(code(&["approx", "0.5", "--max-den", "0"]), 2);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&["verify", "main1", "--depth", "6"]), 0);
    assert_eq!(code(&["verify", "nope"]), 2);
    assert_eq!(code(&["verify", "closure", "--bound", "1"]), 2);
    let out = stdout(&["verify", "forms", "--depth", "4"]);
    assert!(out.starts_with("PASS forms"), "{out}");
}
