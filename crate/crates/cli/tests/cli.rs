use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ccrit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccrit")).current_dir(dir).args(args).output().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn file_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn build_s3_writes_graph_and_report() {
    let d = tempfile::tempdir().unwrap();
    let o = ccrit(d.path(), &["build", "S", "-n", "3", "-m", "7", "-o", "g.txt", "-r", "r.json"]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(d.path().join("g.txt")).unwrap();
    assert_eq!(text.lines().next(), Some("35 56"));
    let r = file_json(&d.path().join("r.json"));
    assert_eq!(r["measured"]["vertices"], 35);
    assert_eq!(r["predictedCr"]["value"], 2);
    assert_eq!(r["predictedCr"]["provenance"], "paper-derived");
}

#[test]
fn build_r_reports_zip_sum() {
    let d = tempfile::tempdir().unwrap();
    let o = ccrit(d.path(), &["build", "R", "-d", "3", "-D", "5", "-p", "2", "-o", "g.txt", "-r", "r.json"]);
    assert!(o.status.success());
    assert_eq!(file_json(&d.path().join("r.json"))["predictedCr"]["value"], 8);
}

#[test]
fn bad_params_exit_nonzero() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(ccrit(d.path(), &["build", "S", "-n", "3", "-m", "6"]).status.code(), Some(2));
    assert_eq!(ccrit(d.path(), &["solve", "-a", "3", "-b", "2", "-k", "600"]).status.code(), Some(2));
    assert_eq!(ccrit(d.path(), &["verify", "missing.txt", "--planar"]).status.code(), Some(2));
}

#[test]
fn verify_round_trip() {
    let d = tempfile::tempdir().unwrap();
    ccrit(d.path(), &["build", "S", "-n", "3", "-m", "7", "-o", "s.txt", "-r", "s.json"]);
    let o = ccrit(d.path(), &["verify", "s.txt", "--critical", "2", "--simple", "--average-degree", "--connectivity", "3"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["checks"]["critical"]["verdict"], "critical");
    assert_eq!(v["measured"], file_json(&d.path().join("s.json"))["measured"]);
    ccrit(d.path(), &["build", "Kb", "-d", "3", "-D", "5", "-o", "k.json", "-r", "k.r", "--format", "json"]);
    let v = stdout_json(&ccrit(d.path(), &["verify", "k.json", "--cr-exact"]));
    assert_eq!(v["checks"]["crExact"]["value"], 4);
    ccrit(d.path(), &["build", "K", "-n", "4", "-o", "p.txt", "-r", "p.r"]);
    let v = stdout_json(&ccrit(d.path(), &["verify", "p.txt", "--cr-exact", "--planar"]));
    assert_eq!(v["checks"]["crExact"]["value"], 0);
    assert_eq!(v["checks"]["planar"], true);
}

#[test]
fn budget_exhaustion_is_unknown() {
    let d = tempfile::tempdir().unwrap();
    ccrit(d.path(), &["build", "K", "-n", "6", "-o", "k.txt", "-r", "k.r"]);
    let o = ccrit(d.path(), &["cr", "k.txt", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout_json(&o)["value"], "unknown");
}

#[test]
fn tile_and_tcr() {
    let d = tempfile::tempdir().unwrap();
    assert!(ccrit(d.path(), &["tile", "S", "-n", "3", "--invert-right", "-o", "t.json"]).status.success());
    let o = ccrit(d.path(), &["tcr", "t.json"]);
    assert_eq!(stdout_json(&o)["value"], 2);
}

#[test]
fn zip_classes_and_graph() {
    let d = tempfile::tempdir().unwrap();
    ccrit(d.path(), &["build", "Kb", "-d", "3", "-D", "3", "-o", "k.txt", "-r", "k.r"]);
    let o = ccrit(d.path(), &["zip", "k.txt", "0", "k.txt", "0", "--classes"]);
    assert_eq!(stdout_json(&o)["classes"], 1);
    let o = ccrit(d.path(), &["zip", "k.txt", "0", "k.txt", "0", "-o", "z.txt", "-r", "z.json"]);
    assert!(o.status.success());
    assert_eq!(file_json(&d.path().join("z.json"))["measured"]["vertices"], 10);
    assert_eq!(ccrit(d.path(), &["zip", "k.txt", "0", "k.txt", "0", "--sigma", "3:3"]).status.code(), Some(2));
}

#[test]
fn solve_and_predict() {
    let d = tempfile::tempdir().unwrap();
    let v = stdout_json(&ccrit(d.path(), &["solve", "-a", "3", "-b", "2", "-k", "645"]));
    assert_eq!((v["n"].as_i64(), v["c"].as_i64(), v["w"].as_i64(), v["p"].as_i64(), v["q"].as_i64()), (Some(4), Some(129), Some(2), Some(349), Some(5)));
    let v = stdout_json(&ccrit(d.path(), &["gamma", "predict", "-a", "1", "-b", "2", "-k", "498", "--minimal-t"]));
    assert_eq!(v["params"]["t"], 34);
    assert_eq!(v["params"]["outsideFamily"], true);
    assert_eq!(v["vertices"], 776 * 34 - 136);
}

#[test]
fn outputs_are_deterministic() {
    let d = tempfile::tempdir().unwrap();
    for out in ["a", "b"] {
        let (g, r) = (format!("{out}.dot"), format!("{out}.json"));
        let o = ccrit(d.path(), &["build", "S", "-n", "4", "-m", "15", "--certify", "--seed", "7", "--format", "dot", "-o", &g, "-r", &r]);
        assert!(o.status.success());
    }
    for ext in ["dot", "json"] {
        let a = std::fs::read(d.path().join(format!("a.{ext}"))).unwrap();
        let b = std::fs::read(d.path().join(format!("b.{ext}"))).unwrap();
        assert_eq!(a, b);
    }
    let r = file_json(&d.path().join("a.json"));
    assert_eq!(r["cr"]["value"], 5);
    assert_eq!(r["seed"], 7);
}
