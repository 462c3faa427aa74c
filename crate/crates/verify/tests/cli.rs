use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mhs-verify")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json_report(args: &[&str], path: &Path) -> (i32, Vec<u8>) {
    let mut all: Vec<&str> = args.to_vec();
    all.push("--json");
    all.push(path.to_str().unwrap());
    let status = code(&all);
    (status, std::fs::read(path).unwrap())
}

#[test]
fn passing_runs_exit_zero() {
    assert_eq!(code(&["lemma", "cartan"]), 0);
    assert_eq!(code(&["lemma", "jet", "--lambda", "3"]), 0);
    assert_eq!(code(&["lemma", "extremal", "--s2", "1", "--resolution", "10000"]), 0);
    assert_eq!(code(&["lemma", "theorem", "--trials", "20"]), 0);
    assert_eq!(code(&["spectrum", "--values", "-1,-1,0,2"]), 0);
    assert_eq!(code(&["curvature", "--values", "1/2,-1/2,3,-3", "--check"]), 0);
}

#[test]
fn failed_or_inconclusive_runs_exit_one() {
    assert_eq!(code(&["all", "--trials", "20", "--no-cheng-yang"]), 1);
    assert_eq!(code(&["all", "--trials", "20", "--inject", "gbc.const=13"]), 1);
    assert_eq!(code(&["all", "--trials", "20", "--drop-middle-equation"]), 1);
    assert_eq!(code(&["lemma", "cartan", "--no-munzner"]), 1);
    assert_eq!(code(&["lemma", "jet", "--drop-middle-equation"]), 1);
    assert_eq!(code(&["lemma", "jet", "--lambda", "-1"]), 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["all", "--inject", "bogus=1"]), 2);
    assert_eq!(code(&["all", "--trials", "many"]), 2);
    assert_eq!(code(&["spectrum", "--values", "1,2,x"]), 2);
    assert_eq!(code(&["curvature", "--values", "1,2,3,4", "--check"]), 2);
}

#[test]
fn text_report_lists_steps() {
    let out = run(&["all", "--trials", "20"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[AXIOM] 2. poincare_hopf"));
    assert!(text.contains("[PASS] 7. pinching_contradiction"));
    assert!(text.ends_with("summary: PASS\n"));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let args = ["all", "--trials", "50", "--seed", "9"];
    let (ca, ja) = json_report(&args, &a);
    let (cb, jb) = json_report(&args, &b);
    assert_eq!((ca, cb), (0, 0));
    assert_eq!(ja, jb);
}

#[test]
fn json_file_has_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("theorem.json");
    let (status, bytes) = json_report(&["all", "--trials", "20", "--inject", "weyl.f4=-3"], &path);
    assert_eq!(status, 1);
    let v: Value = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["summary"], "FAIL");
    assert_eq!(v["config"]["coefficient_overrides"]["weyl.f4"], "-3");
    let steps = v["steps"].as_array().unwrap();
    // a failure stops the pipeline
    assert_eq!(steps.len(), 3);
    assert_eq!(steps[2]["id"], "gbc_reduction");
    assert_eq!(steps[2]["status"], "FAIL");
    assert!(steps.iter().all(|s| s["residuals"].as_array().unwrap().len()
        == s["residual_labels"].as_array().unwrap().len()));
}

#[test]
fn unwritable_json_path_is_a_usage_error() {
    assert_eq!(code(&["lemma", "cartan", "--json", "/nonexistent/dir/out.json"]), 2);
}
