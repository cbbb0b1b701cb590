use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const KRAWTCHOUK_D1: &str = r#"{
  "a": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "-1"]]},
  "a_star": {"rows": 2, "cols": 2, "entries": [["1/3", "2/3"], ["4/3", "-1/3"]]}
}"#;

const KRAWTCHOUK_D1_HALF: &str = r#"{
  "a": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "-1"]]},
  "a_star": {"rows": 2, "cols": 2, "entries": [["0", "1"], ["1", "0"]]}
}"#;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_leonard-kit"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_krawtchouk() {
    let dir = TempDir::new().unwrap();
    let pair = write(&dir, "pair.json", KRAWTCHOUK_D1);
    let out = run(&["verify", p(&pair)]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["leonard_pair"], true);
    assert_eq!(r["d"], 1);
    assert_eq!(r["a"]["sequences"][0], serde_json::json!(["1", "-1"]));
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_non_leonard_is_negative() {
    let dir = TempDir::new().unwrap();
    let pair = write(
        &dir,
        "pair.json",
        r#"{"a": {"rows": 2, "cols": 2, "entries": [["1","0"],["0","-1"]]},
            "a_star": {"rows": 2, "cols": 2, "entries": [["1","0"],["0","2"]]}}"#,
    );
    let out = run(&["verify", p(&pair)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["leonard_pair"], false);
}

#[test]
fn verify_non_square_is_input_error() {
    let dir = TempDir::new().unwrap();
    let pair = write(
        &dir,
        "pair.json",
        r#"{"a": {"rows": 1, "cols": 2, "entries": [["1","0"]]},
            "a_star": {"rows": 1, "cols": 2, "entries": [["1","0"]]}}"#,
    );
    let out = run(&["verify", p(&pair)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not square"));
}

#[test]
fn malformed_json_is_input_error() {
    let dir = TempDir::new().unwrap();
    let pair = write(&dir, "pair.json", r#"{"a": 1}"#);
    assert_eq!(run(&["verify", p(&pair)]).status.code(), Some(2));
    assert_eq!(run(&["verify", "/nonexistent/pair.json"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn flags_report() {
    let dir = TempDir::new().unwrap();
    let pair = write(&dir, "pair.json", KRAWTCHOUK_D1);
    let out = run(&["flags", p(&pair)]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["count"], 4);
    assert_eq!(r["pairwise_opposite"], true);
    assert_eq!(r["principal_relation"].as_array().unwrap().len(), 2);
}

#[test]
fn adjacent_with_itself_is_negative() {
    let dir = TempDir::new().unwrap();
    let pair = write(&dir, "pair.json", KRAWTCHOUK_D1);
    let out = run(&["adjacent", p(&pair), p(&pair)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["adjacent"], false);
}

#[test]
fn different_p_not_adjacent() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", KRAWTCHOUK_D1);
    let b = write(&dir, "b.json", KRAWTCHOUK_D1_HALF);
    assert_eq!(run(&["adjacent", p(&a), p(&b)]).status.code(), Some(1));
}

#[test]
fn triple_round_trips_through_adjacent() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("triple.json");
    let out = run(&["triple", "--d", "3", "--p", "1/3", "--output", p(&out_path)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = fs::read_to_string(&out_path).unwrap();
    let r: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(r["construction"]["p"], "1/3");
    let pairs = r["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 3);

    let files: Vec<PathBuf> = pairs
        .iter()
        .enumerate()
        .map(|(i, pair)| write(&dir, &format!("p{i}.json"), &pair.to_string()))
        .collect();
    // the first pair is the Krawtchouk pair itself
    let first: Value = serde_json::from_str(&fs::read_to_string(&files[0]).unwrap()).unwrap();
    assert_eq!(first["a_star"]["entries"][0], serde_json::json!(["1", "2", "0", "0"]));
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let out = run(&["adjacent", p(&files[i]), p(&files[j])]);
        assert_eq!(out.status.code(), Some(0));
        let r = report(&out);
        assert_eq!(r["dichotomy"]["branch"], "arithmetic");
        assert_eq!(r["identity_check"]["holds"], true);
        assert_eq!(r["identity_check"]["cells_checked"], 10);
    }
    for f in &files {
        assert_eq!(run(&["verify", p(f)]).status.code(), Some(0));
    }
}

#[test]
fn triple_from_vectors() {
    let dir = TempDir::new().unwrap();
    let v = write(&dir, "v.json", r#"{"v0":["1","0"],"v1":["0","1"],"w0":["1","1"],"w1":["1","-1"]}"#);
    let out = run(&["triple", "--d", "2", "--vectors", p(&v)]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["construction"]["p"], Value::Null);
    assert_eq!(r["construction"]["vectors"]["w1"], serde_json::json!(["1", "-1"]));

    let dep = write(&dir, "dep.json", r#"{"v0":["1","0"],"v1":["2","0"],"w0":["1","1"],"w1":["1","-1"]}"#);
    assert_eq!(run(&["triple", "--d", "2", "--vectors", p(&dep)]).status.code(), Some(2));
    assert_eq!(run(&["triple", "--d", "2", "--p", "1"]).status.code(), Some(2));
    assert_eq!(run(&["triple", "--d", "2"]).status.code(), Some(2));
}

#[test]
fn companions_of_krawtchouk() {
    let dir = TempDir::new().unwrap();
    let pair = write(&dir, "pair.json", KRAWTCHOUK_D1);
    let out = run(&["companions", p(&pair)]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["mutually_adjacent"], true);
    assert_eq!(r["normal_form"]["p"], "1/3");
    assert_eq!(r["b"]["rows"], 2);
}

#[test]
fn classify_sequences() {
    let dir = TempDir::new().unwrap();
    let arith = write(&dir, "a.json", r#"["3", "1", "-1", "-3"]"#);
    let out = run(&["classify-seq", p(&arith)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["alpha"], "-2");

    let q = write(&dir, "q.json", r#"{"sequence": ["1", "2", "4", "8"]}"#);
    let out = run(&["classify-seq", p(&q)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["q"], "2");

    let neither = write(&dir, "n.json", r#"["0", "1", "3", "4"]"#);
    assert_eq!(run(&["classify-seq", p(&neither)]).status.code(), Some(1));
    let repeated = write(&dir, "r.json", r#"["0", "1", "0"]"#);
    assert_eq!(run(&["classify-seq", p(&repeated)]).status.code(), Some(2));
}

#[test]
fn max_dim_is_enforced() {
    let dir = TempDir::new().unwrap();
    let pair = write(&dir, "pair.json", KRAWTCHOUK_D1);
    let out = bin().args(["verify", p(&pair)]).env("LEONARD_KIT_MAX_DIM", "1").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["triple", "--d", "5", "--p", "1/2"]).env("LEONARD_KIT_MAX_DIM", "4").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["verify", p(&pair)]).env("LEONARD_KIT_MAX_DIM", "lots").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["triple", "--d", "2", "--p", "2/5"]);
    let b = run(&["triple", "--d", "2", "--p", "2/5"]);
    assert_eq!(a.stdout, b.stdout);
    let dir = TempDir::new().unwrap();
    let pair = write(&dir, "pair.json", KRAWTCHOUK_D1);
    assert_eq!(run(&["flags", p(&pair)]).stdout, run(&["flags", p(&pair)]).stdout);
}
