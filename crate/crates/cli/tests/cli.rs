use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_endotriv")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn algebra_build_reports_dimension_and_writes_presentation() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("alg.json");
    let o = run(&["algebra", "build", "--preset", "sl2-u1", "-p", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["dim"], 3);
    let pres: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(pres["basis"], serde_json::json!(["f"]));
}

#[test]
fn usage_errors_exit_64_and_failures_exit_1() {
    assert_eq!(run(&["census", "--bogus"]).status.code(), Some(64));
    assert_eq!(run(&[]).status.code(), Some(64));
    assert_eq!(run(&["algebra", "build", "--preset", "nope", "-p", "2"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn census_dimension_one() {
    let o = run(&["census", "--preset", "sl2-u1", "-p", "2", "--dim", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["class_count"], 1);
    let o = run(&["census", "--preset", "sl2-u1", "-p", "2", "--dim", "2", "--sample", "50", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["class_count"], 0);
}

#[test]
fn module_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    // Two-dimensional module over k[f]/f^3 with f a single Jordan block.
    let m = write(d, "m.json", r#"{"algebra":{"preset":"sl2-u1","p":3},"dim":2,"action":[[[0,0],[1,0]]],"weights":null}"#);
    let bad = write(d, "bad.json", r#"{"algebra":{"preset":"sl2-u1","p":2},"dim":2,"action":[[[1,0],[0,0]]],"weights":null}"#);

    let o = run(&["module", "check", &m]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["valid"], true);
    let o = run(&["module", "check", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["valid"], false);

    let dual = d.join("dual.json");
    assert_eq!(run(&["module", "dual", &m, "--out", dual.to_str().unwrap()]).status.code(), Some(0));
    let t = d.join("t.json");
    let o = run(&["module", "tensor", &m, dual.to_str().unwrap(), "--out", t.to_str().unwrap()]);
    assert_eq!(json(&o)["dim"], 4);
    let o = run(&["module", "strip", t.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["dim"], 1);
    let o = run(&["module", "decompose", t.to_str().unwrap()]);
    let mut dims: Vec<u64> = json(&o)["dims"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    dims.sort();
    assert_eq!(dims, [1, 3]);

    let o = run(&["endo", "check", &m]);
    assert_eq!(json(&o)["endotrivial"], true);
    let o = run(&["endo", "degree", &m]);
    assert_eq!(json(&o)["degree"], 1);
    let s = d.join("s.json");
    run(&["syzygy", "--module", &m, "-n", "-2", "--out", s.to_str().unwrap()]);
    let o = run(&["endo", "add", &m, s.to_str().unwrap()]);
    let sum: Value = json(&o);
    assert_eq!(sum["dim"], 1);
}

#[test]
fn sl3_omega2_passes_and_dot_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("omega2.dot");
    let report = dir.path().join("report.json");
    let o = run(&["repro", "sl3-omega2", "--emit-dot", dot.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&dot).unwrap();
    let diagram = endotriv::repmod::parse_dot(&text).unwrap();
    assert_eq!(diagram.nodes.len(), 9);
    let first = std::fs::read_to_string(&report).unwrap();
    run(&["repro", "sl3-omega2", "--out", report.to_str().unwrap()]);
    assert_eq!(first, std::fs::read_to_string(&report).unwrap(), "report is deterministic");
}

#[test]
fn sl2_table_flags_odd_step_formulas() {
    let o = run(&["repro", "sl2-table", "-p", "3", "--max-n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let r = json(&o);
    assert_eq!(r["overall"], "flagged");
    let even = r["checks"].as_array().unwrap().iter().find(|c| c["id"] == "trivial/n2/weyl").unwrap();
    assert_eq!(even["verdict"], "pass");
}
