//! End-to-end runs of the `quatinv` binary: verbs, JSON shapes and exit codes.

mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use quatinv::cli::emit_matrix;
use quatinv::QMatrix;
use serde_json::Value;
use tempfile::NamedTempFile;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quatinv"))
        .args(args)
        .env_remove("QUATINV_DET_CAP")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn matrix_of(v: &Value) -> QMatrix {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn inverse_of_the_example() {
    let out = run(&["--canonical", "inverse", "--kind", "mp"], &emit_matrix(&common::example()));
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let x = matrix_of(&v["result"]);
    assert_eq!(x.at(2, 1), &common::half(0, 0, 0, -1));
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn both_methods_agree_on_right_core() {
    let input = file(&emit_matrix(&common::example()));
    let out = run(
        &["inverse", "--kind", "core-r", "--method", "both", "--input", input.path().to_str().unwrap()],
        "",
    );
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["agree"], Value::Bool(true));
    assert_eq!(v["verification"]["system"], "core_right");
}

#[test]
fn every_kind_runs_on_the_example() {
    for kind in ["mp", "drazin", "group", "core-r", "core-l", "corep-r", "corep-l", "dmp", "mpd", "cmp"] {
        let out = run(&["inverse", "--kind", kind, "--method", "both"], &emit_matrix(&common::example()));
        assert_eq!(code(&out), 0, "{kind}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn rank_index_det_and_split() {
    let a = emit_matrix(&common::example());
    let rank = json(&run(&["rank"], &a));
    assert_eq!(rank["rank"], 2);
    assert_eq!(rank["elimination_rank"], 2);
    assert_eq!(json(&run(&["index"], &a))["index"], 1);
    let det = json(&run(&["det"], &a));
    assert_eq!(det["rdet"].as_array().unwrap().len(), 3);
    let split = json(&run(&["split"], &a));
    assert!(matrix_of(&split["nilpotent_part"]).is_zero());
    let nil = json(&run(&["index"], &emit_matrix(&common::nilpotent2())));
    assert_eq!(nil["index"], 2);
}

#[test]
fn hermitian_det_reports_hdet() {
    let h = QMatrix::from_int_rows(&[vec![[2, 0, 0, 0], [0, 0, 0, 1]], vec![[0, 0, 0, -1], [3, 0, 0, 0]]]).unwrap();
    let v = json(&run(&["det"], &emit_matrix(&h)));
    assert_eq!(v["hdet"], "5");
}

#[test]
fn group_inverse_of_nilpotent_is_a_precondition_failure() {
    let out = run(&["inverse", "--kind", "group"], &emit_matrix(&common::nilpotent2()));
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["error"]["exit_code"], 3);
}

#[test]
fn verify_candidates() {
    let a = file(&emit_matrix(&common::example()));
    let good = quatinv::oracle::mp_oracle(&common::example());
    let bad = common::bump(&good, 1, 1);
    for (x, expect) in [(good, 0), (bad, 1)] {
        let cand = file(&emit_matrix(&x));
        let out = run(
            &[
                "verify",
                "--kind",
                "mp",
                "--input",
                a.path().to_str().unwrap(),
                "--candidate",
                cand.path().to_str().unwrap(),
            ],
            "",
        );
        assert_eq!(code(&out), expect);
        assert_eq!(json(&out)["passed"], Value::Bool(expect == 0));
    }
}

#[test]
fn verify_random_suite() {
    let out = run(&["verify", "--kind", "cmp", "--random", "14", "--seed", "3", "--sizes", "2,3"], "");
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["checked"], 14);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn size_cap_is_enforced() {
    let a = emit_matrix(&common::example());
    let out = run(&["--cap", "2", "inverse", "--kind", "mp"], &a);
    assert_eq!(code(&out), 4);
    let out = Command::new(env!("CARGO_BIN_EXE_quatinv"))
        .args(["rank", "--input", file(&a).path().to_str().unwrap()])
        .env("QUATINV_DET_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(code(&out), 4);
}

#[test]
fn malformed_input_is_a_parse_error() {
    let out = run(&["rank"], "{\"rows\": 1,\n \"cols\": 1, \"data\": [[[\"1\", \"x\"");
    assert_eq!(code(&out), 5);
    let msg = json(&out)["error"]["message"].as_str().unwrap().to_string();
    assert!(msg.contains("line 2"), "{msg}");
    let out = run(&["rank"], r#"{"rows":2,"cols":1,"data":[[["1","0","0","0"]]]}"#);
    assert_eq!(code(&out), 5);
}

#[test]
fn unknown_arguments_are_rejected() {
    let out = run(&["inverse", "--kind", "nonsense"], "");
    assert_eq!(code(&out), 3);
}

#[test]
fn demo_reproduces_and_detects_corruption() {
    let out = run(&["demo"], "");
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("all values reproduced"));

    let mut golden: Value = serde_json::from_str(quatinv::cli::GOLDEN).unwrap();
    golden["rank"] = Value::from(3);
    let f = file(&golden.to_string());
    let out = run(&["demo", "--json", "--golden", f.path().to_str().unwrap()], "");
    assert_eq!(code(&out), 2);
    let v = json(&out);
    let failed: Vec<&str> = v["steps"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["ok"] == Value::Bool(false))
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["rank A"]);
}
