use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_specjoin"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Writes `gen <family params...>` output to `dir/name.g6`.
fn gen(dir: &Path, name: &str, family: &[&str]) -> PathBuf {
    let mut args = vec!["gen"];
    args.extend_from_slice(family);
    let o = run(&args);
    assert!(o.status.success(), "gen {family:?}: {}", stderr(&o));
    let p = dir.join(format!("{name}.g6"));
    std::fs::write(&p, &o.stdout).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn degree_counts(g6: &str) -> Vec<(usize, usize)> {
    let g = specjoin::graph::graph6::parse_graph6(g6).unwrap();
    specjoin::degree_multiset(&g)
}

#[test]
fn gen_outputs() {
    let o = run(&["gen", "cycle", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "Cl\n");

    let o = run(&["gen", "hypercube", "4"]);
    assert_eq!(stdout(&o).lines().count(), 1);
    assert_eq!(specjoin::graph::graph6::parse_graph6(stdout(&o).trim()).unwrap().order(), 16);

    let o = run(&["gen", "cycle", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cycle length must be ≥ 3"));
    assert!(o.stdout.is_empty());

    assert_eq!(run(&["gen", "dodecahedron"]).status.code(), Some(2));
}

#[test]
fn gen_to_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("p.g6");
    let o = run(&["gen", "petersen", "--out", s(&out)]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 1);
}

#[test]
fn join_degree_sequences() {
    let dir = TempDir::new().unwrap();
    let q4 = gen(dir.path(), "q4", &["hypercube", "4"]);
    let k2 = gen(dir.path(), "k2", &["complete", "2"]);
    let labels = dir.path().join("labels.json");

    let o = run(&["join", "--kind", "sv", s(&q4), s(&k2), "--labels", s(&labels)]);
    assert!(o.status.success());
    assert_eq!(degree_counts(stdout(&o).trim()), vec![(17, 2), (6, 16), (2, 32)]);
    let side: Value = serde_json::from_str(&std::fs::read_to_string(&labels).unwrap()).unwrap();
    assert_eq!((side["original"].as_u64(), side["subdivision"].as_u64(), side["second"].as_u64()), (Some(16), Some(32), Some(2)));
    assert_eq!(side["labels"].as_array().unwrap().len(), 50);

    let o = run(&["join", "--kind", "se", s(&q4), s(&k2)]);
    assert_eq!(degree_counts(stdout(&o).trim()), vec![(33, 2), (4, 48)]);

    let e0 = gen(dir.path(), "e0", &["empty", "0"]);
    let o = run(&["join", "--kind", "sv", s(&e0), s(&k2)]);
    assert_eq!(stdout(&o), "A_\n");
}

#[test]
fn join_rejects_bad_input() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "C~~\n").unwrap();
    let k2 = gen(dir.path(), "k2", &["complete", "2"]);
    let o = run(&["join", "--kind", "sv", s(&bad), s(&k2)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("at byte"), "{}", stderr(&o));
    assert_eq!(run(&["join", "--kind", "xx", s(&k2), s(&k2)]).status.code(), Some(2));
}

#[test]
fn stdin_input() {
    let mut child = bin()
        .args(["spectrum", "-", "--format", "csv"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"A_\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o), "value,multiplicity\n0,1\n2,1\n");
}

#[test]
fn spectrum_methods() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(dir.path(), "c4", &["cycle", "4"]);
    let k1 = gen(dir.path(), "k1", &["empty", "1"]);
    let p3 = gen(dir.path(), "p3", &["path", "3"]);

    let o = run(&["spectrum", s(&c4), "--method", "direct"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["method"], "direct");
    let groups: Vec<(f64, u64)> = v["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["value"].as_f64().unwrap(), e["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(groups.len(), 3);
    for ((val, mult), (ev, em)) in groups.iter().zip([(0.0, 1), (1.0, 2), (2.0, 1)]) {
        assert!((val - ev).abs() < 1e-12);
        assert_eq!(*mult, em);
    }

    let o = run(&["spectrum", "--method", "closed-sv", s(&c4), "--g2", s(&k1)]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 9);
    assert_eq!(v["method"], "closed-form-sv");
    assert_eq!(v["factors"][0]["r"], 2);
    assert_eq!(v["parts"]["quadratic_part"].as_array().unwrap().len(), 3);
    let t = 1.0 / 3f64.sqrt();
    let values: Vec<f64> = v["eigenvalues"].as_array().unwrap().iter().map(|e| e["value"].as_f64().unwrap()).collect();
    assert!(values.iter().any(|x| (x - (1.0 - t)).abs() < 1e-12));
    assert!(values.iter().any(|x| (x - (1.0 + t)).abs() < 1e-12));

    let o = run(&["spectrum", s(&p3), "--method", "closed-sv", "--g2", s(&k1)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("vertex 0") && stderr(&o).contains("vertex 1"));

    assert_eq!(run(&["spectrum", "--method", "closed-se", s(&c4)]).status.code(), Some(2));
}

#[test]
fn verify_theorems() {
    let dir = TempDir::new().unwrap();
    let k3 = gen(dir.path(), "k3", &["complete", "3"]);
    let k2 = gen(dir.path(), "k2", &["complete", "2"]);
    let pet = gen(dir.path(), "pet", &["petersen"]);

    let o = run(&["verify", "--theorem", "2.3", s(&k3), s(&k2)]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.trim_end().ends_with("PASS"));
    let dev: f64 = out
        .lines()
        .find_map(|l| l.strip_prefix("max relative deviation: "))
        .and_then(|l| l.split_whitespace().next())
        .unwrap()
        .parse()
        .unwrap();
    assert!(dev < 1e-9);

    let o = run(&["verify", "--theorem", "3.4", s(&k3), s(&k2)]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("sv: closed 490 matrix-tree 490"));

    let o = run(&["verify", "--theorem", "2.3", s(&k2), s(&k2)]);
    assert_eq!(o.status.code(), Some(1));

    for th in ["2.4", "3.3"] {
        assert!(run(&["verify", "--theorem", th, s(&pet), s(&k3)]).status.success(), "{th}");
    }
    for th in ["lemma2.1", "lemma2.2", "eq1"] {
        assert!(run(&["verify", "--theorem", th, s(&pet)]).status.success(), "{th}");
    }
    assert_eq!(run(&["verify", "--theorem", "9.9", s(&pet)]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--theorem", "3.4", s(&pet)]).status.code(), Some(2));
}

#[test]
fn cospectral_certificates() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(dir.path(), "c4", &["cycle", "4"]);
    let c5 = gen(dir.path(), "c5", &["cycle", "5"]);
    let star = gen(dir.path(), "star", &["complete_bipartite", "1", "3"]);

    let o = run(&["cospectral", s(&c4), s(&star), "--exact", "--iso"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["isomorphic"], false);
    assert_eq!(v["poly_a"], v["poly_b"]);

    let o = run(&["cospectral", s(&c4), s(&c5)]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equal"], false);
}

#[test]
fn cospectral_q4_joins() {
    let dir = TempDir::new().unwrap();
    let q4 = gen(dir.path(), "q4", &["hypercube", "4"]);
    let k2 = gen(dir.path(), "k2", &["complete", "2"]);
    let ex: Value = serde_json::from_str(&stdout(&run(&["example32", "--json"]))).unwrap();
    let switched = dir.path().join("q4s.g6");
    std::fs::write(&switched, ex["switched_graph6"].as_str().unwrap()).unwrap();

    let mut joins = Vec::new();
    for (name, base) in [("a", &q4), ("b", &switched)] {
        let out = dir.path().join(format!("sv_{name}.g6"));
        let o = run(&["join", "--kind", "sv", s(base), s(&k2), "--out", s(&out)]);
        assert!(o.status.success());
        joins.push(out);
    }
    let o = run(&["cospectral", s(&joins[0]), s(&joins[1]), "--exact", "--iso"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["equal"].as_bool(), v["isomorphic"].as_bool()), (Some(true), Some(false)));
}

#[test]
fn example32_report() {
    let o = run(&["example32"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 6);
    assert!(!text.contains("FAIL"));
    assert_eq!(run(&["example32"]).stdout, o.stdout, "reruns are byte-identical");

    let o = run(&["example32", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in ["switch_found", "base_pair_certified", "sv_pair_certified", "se_pair_certified", "sv_degrees", "se_degrees"] {
        assert_eq!(v[key], true, "{key}");
    }
}

#[test]
fn invariants_reports() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(dir.path(), "c4", &["cycle", "4"]);
    let k2 = gen(dir.path(), "k2", &["complete", "2"]);
    let v: Value = serde_json::from_str(&stdout(&run(&["invariants", s(&c4)]))).unwrap();
    assert_eq!(v["spanning_trees"], "4");
    assert!((v["kirchhoff"].as_f64().unwrap() - 20.0).abs() < 1e-12);

    let o = run(&["invariants", s(&c4), "--closed", "se", "--g2", s(&k2)]);
    let closed: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let join = dir.path().join("j.g6");
    std::fs::write(&join, format!("{}\n", closed["graph"].as_str().unwrap())).unwrap();
    let direct: Value = serde_json::from_str(&stdout(&run(&["invariants", s(&join)]))).unwrap();
    assert_eq!(closed["spanning_trees"], direct["spanning_trees"]);
    let (a, b) = (closed["kirchhoff"].as_f64().unwrap(), direct["kirchhoff"].as_f64().unwrap());
    assert!((a - b).abs() <= 1e-9 * b);
}

#[test]
fn thread_setting() {
    let o = bin().args(["gen", "cycle", "5"]).env("SPECJOIN_THREADS", "2").output().unwrap();
    assert!(o.status.success());
    let o = bin().args(["gen", "cycle", "5"]).env("SPECJOIN_THREADS", "many").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}
