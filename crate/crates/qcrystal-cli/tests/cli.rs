use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcrystal")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    assert_eq!(code(o), 0, "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn rows(v: &Value) -> Vec<Vec<String>> {
    serde_json::from_value(v["rows"].clone()).unwrap()
}

fn strs(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
}

#[test]
fn insert_symplectic_example() {
    let v = json(&run(&["insert", "--flavor", "speg", "--json", "(4)(23)(12)"]));
    assert_eq!(rows(&v["P"]), strs(&[&["2", "3", "4"], &["4", "5"]]));
    assert_eq!(rows(&v["Q"]), strs(&[&["1", "2'", "3'"], &["2", "3'"]]));
    assert_eq!(v["trace"].as_array().unwrap().len(), 5);
}

#[test]
fn insert_mixed_example() {
    let v = json(&run(&["insert", "--flavor", "hm", "--json", "332332"]));
    assert_eq!(rows(&v["P"]), strs(&[&["2", "2", "3'", "3"], &["3", "3"]]));
    assert_eq!(rows(&v["Q"]), strs(&[&["1", "2", "4", "5"], &["3", "6"]]));
}

#[test]
fn insert_plain_and_orthogonal_examples() {
    let v = json(&run(&["insert", "--flavor", "eg", "--json", "(4)(23)(2)"]));
    assert_eq!(rows(&v["P"]), strs(&[&["2", "3"], &["3"], &["4"]]));
    assert_eq!(rows(&v["Q"]), strs(&[&["1", "2"], &["2"], &["3"]]));
    let v = json(&run(&["insert", "--flavor", "oeg", "--json", "(4)(23)(2)(1)"]));
    assert_eq!(rows(&v["P"]), strs(&[&["1", "2", "3", "4"], &["4"]]));
    assert_eq!(rows(&v["Q"]), strs(&[&["1", "2'", "3'", "4'"], &["2"]]));
}

#[test]
fn insert_empty_and_invalid() {
    let v = json(&run(&["insert", "--json", ""]));
    assert!(rows(&v["P"]).is_empty() && rows(&v["Q"]).is_empty());
    assert_eq!(code(&run(&["insert", "--flavor", "oeg", "22"])), 2);
    assert_eq!(code(&run(&["insert", "(4)(2"])), 2);
    // the unchecked path skips validation
    assert_eq!(code(&run(&["insert", "--unchecked", "22"])), 0);
}

#[test]
fn crystal_figure_graphs() {
    for args in [
        vec!["crystal", "--flavor", "oeg", "--pi", "(1,3)(2,5)", "--n", "3", "--json"],
        vec!["crystal", "--flavor", "speg", "--pi", "(1,4)(2,6)(3,5)", "--n", "3", "--json"],
        vec!["crystal", "--carrier", "shtab", "--shape", "3,1", "--n", "3", "--json"],
    ] {
        let v = json(&run(&args));
        assert_eq!(v["vertices"].as_array().unwrap().len(), 24, "{args:?}");
        assert_eq!(v["edges"].as_array().unwrap().len(), 38, "{args:?}");
        assert_eq!(v["components"].as_array().unwrap().len(), 1);
        assert_eq!(v["queer"], Value::Bool(true));
    }
}

#[test]
fn crystal_output_is_deterministic() {
    let args = ["crystal", "--pi", "(1,3)(2,5)", "--dot"];
    let a = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, run(&args).stdout);
    let dot = String::from_utf8(a.stdout).unwrap();
    assert!(dot.starts_with("digraph component_0 {"));
    assert_eq!(dot.matches(" -> ").count(), 38);
}

#[test]
fn crystal_writes_one_file_per_component() {
    let dir = std::env::temp_dir().join(format!("qcrystal-cli-test-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    // s1 s3 has character s_2 + s_11, so two components
    let o = run(&["crystal", "--flavor", "eg", "--pi", "(1,2)(3,4)", "--n", "2", "--json", "--out", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let listed = String::from_utf8(o.stdout).unwrap().lines().count();
    let files = std::fs::read_dir(&dir).unwrap().count();
    assert_eq!(listed, files);
    let v = json(&run(&["crystal", "--flavor", "eg", "--pi", "(1,2)(3,4)", "--n", "2", "--json"]));
    assert_eq!(files, v["components"].as_array().unwrap().len());
    assert_eq!(files, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn crystal_trivial_and_caps() {
    let v = json(&run(&["crystal", "--pi", "1", "--n", "3", "--json"]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 1);
    assert!(v["edges"].as_array().unwrap().is_empty());
    let o = Command::new(env!("CARGO_BIN_EXE_qcrystal"))
        .args(["crystal", "--pi", "(1,3)(2,5)"])
        .env("QC_VERTEX_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert_eq!(code(&run(&["crystal", "--pi", "(1,3)(2,5)", "--cap", "23"])), 3);
    assert_eq!(code(&run(&["crystal", "--pi", "(1,3)(2,5)", "--cap", "24"])), 0);
    assert_eq!(code(&run(&["crystal", "--carrier", "shtab", "--shape", "1,3"])), 2);
    assert_eq!(code(&run(&["crystal", "--flavor", "hm", "--pi", "(1,2)"])), 2);
}

#[test]
fn bump_traces() {
    let v = json(&run(&["bump", "--flavor", "oeg", "--pi", "(2,5)", "2134"]));
    let chain: Vec<(String, u64)> = v["chain"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| (m["word"].as_str().unwrap().to_string(), m["mark"].as_u64().unwrap()))
        .collect();
    let want = [("2134", 2), ("2234", 2), ("3234", 1), ("3244", 3), ("3245", 4)];
    assert_eq!(chain, want.map(|(w, i)| (w.to_string(), i)));
    assert_eq!(v["result"], "3245");
    let v = json(&run(&["bump", "--flavor", "speg", "--pi", "[2,1,6,5,4,3]", "243"]));
    assert_eq!(v["result"], "465");
    assert_eq!(v["atoms"].as_array().unwrap().len(), 4);
    // an unmarked word is fixed
    let v = json(&run(&["bump", "--flavor", "eg", "--pi", "(5,6)", "12"]));
    assert_eq!(v["result"], "12");
    assert!(v["chain"].as_array().unwrap().is_empty());
    assert_eq!(code(&run(&["bump", "--pi", "(2,5)", "2134", "--cap", "2"])), 3);
    assert_eq!(code(&run(&["bump", "--pi", "(2,5)", "22"])), 2);
}

#[test]
fn expand_and_class() {
    let o = run(&["expand", "--pi", "(1,4)(2,5)", "--n", "5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8(o.stdout).unwrap().trim(), "P_(3,2)");
    assert!(o.stderr.is_empty());
    let o = run(&["expand", "--pi", "(1,4)(2,5)", "--n", "2"]);
    assert!(String::from_utf8(o.stderr).unwrap().contains("warning"));
    let o = run(&["expand", "--flavor", "eg", "--pi", "(1,3)", "--n", "3"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap().trim(), "s_(2,1)");
    let words: Vec<String> = serde_json::from_value(json(&run(&["class", "--pi", "(2,5)", "--json"]))).unwrap();
    assert_eq!(words, ["234", "324", "342", "432"]);
    let o = run(&["class", "--flavor", "eg", "--word", "2134"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "2134\n2314\n2341\n");
    assert_eq!(code(&run(&["class", "--word", "21", "--relation", "bogus"])), 2);
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "oeg-fibers", "--maxlen", "3"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8(o.stdout).unwrap().contains("pass"));
    let o = run(&["verify", "conjecture-fb-bound", "--maxlen", "3"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8(o.stdout).unwrap().contains("checked, no counterexample"));
    let v = json(&run(&["verify", "dual-equivalence", "--maxlen", "3", "--json"]));
    assert_eq!(v[0]["ok"], Value::Bool(true));
    assert_eq!(code(&run(&["verify", "no-such-target"])), 2);
    assert_eq!(code(&run(&["verify", "eg-fibers", "--maxlen", "0"])), 2);
    assert_eq!(code(&run(&["verify", "eg-fibers", "--n", "9"])), 2);
}
