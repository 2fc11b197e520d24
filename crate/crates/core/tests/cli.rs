use std::path::{Path, PathBuf};

use sr_cone::cli::{run_with, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE};

const C4: &str = r#"{"vertices": ["x1", "x2", "x3", "x4"],
 "facets": [["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x4", "x1"]]}"#;
const PATH: &str = r#"{"vertices": ["a", "b", "c", "d"], "facets": [["a", "b"], ["b", "c"], ["c", "d"]]}"#;
const BOUNDARY: &str = r#"{"vertices": ["x1", "x2", "x3", "x4"],
 "facets": [["x1", "x2", "x3"], ["x1", "x2", "x4"], ["x1", "x3", "x4"], ["x2", "x3", "x4"]]}"#;
const BOUNDARY_BRANCH: &str = r#"{"vertices": ["x1", "x2", "x3", "x4", "y"],
 "facets": [["x1", "x2", "x3"], ["x1", "x2", "x4"], ["x1", "x3", "x4"], ["x2", "x3", "x4"], ["x1", "x2", "y"]]}"#;
const NOT_PURE: &str = r#"{"vertices": ["a", "b", "c", "d"], "facets": [["a", "b", "c"], ["c", "d"]]}"#;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(std::iter::once("srcone").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn info_reports_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = file(dir.path(), "c4.json", C4);
    let (code, out, _) = run(&["info", s(&c4)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("facets (4):"));
    assert!(out.contains("height: 2\n"));
    assert!(out.contains("ideal: (x1*x3, x2*x4)\n"));

    let np = file(dir.path(), "np.json", NOT_PURE);
    let (_, out, _) = run(&["info", s(&np)]);
    assert!(out.contains("subfacets: undefined"));

    let simplex = file(dir.path(), "s.json", r#"{"vertices": ["a", "b"], "facets": [["a", "b"]]}"#);
    let (_, out, _) = run(&["info", s(&simplex)]);
    assert!(out.contains("height: 0\n"));
}

#[test]
fn betti_tables() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = file(dir.path(), "c4.json", C4);
    let (code, out, _) = run(&["betti", s(&c4)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("pd: 2\n"));
    assert!(out.contains("reg I: 3\n"));
    let (_, json, _) = run(&["betti", s(&c4), "--format", "json", "--char", "2"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["pd"], 2);
    assert_eq!(v["two_linear"], false);
}

#[test]
fn cone_writes_a_complex_file() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = file(dir.path(), "c4.json", C4);
    let out_path = dir.path().join("cone.json");
    let (code, _, _) = run(&["cone", s(&c4), "--face", "x4", "-o", s(&out_path)]);
    assert_eq!(code, EXIT_OK);
    let cone = sr_cone::io::read_complex(&out_path).unwrap();
    assert_eq!(cone.facets().len(), 5);
    assert_eq!(cone.names().last().unwrap(), "x0");

    // x1, x3 span no edge of the 4-cycle
    let (code, _, err) = run(&["cone", s(&c4), "--face", "x1,x3"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("not a face"));
}

#[test]
fn apex_collision_is_suffixed() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "x0.json", r#"{"vertices": ["x0", "x1"], "facets": [["x0"], ["x1"]]}"#);
    let (code, out, _) = run(&["cone", s(&p), "--face", "x1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("\"x0_1\""));
}

#[test]
fn construct_example_in_both_characteristics() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = file(dir.path(), "c4.json", C4);
    for ch in ["0", "2", "3"] {
        let (code, out, err) = run(&["construct", s(&c4), "--face", "x4", "--char", ch]);
        assert_eq!(code, EXIT_OK, "{err}");
        assert!(out.starts_with("# case"));
        assert!(out.contains("size: 3"));
        assert!(out.contains("verification: pass"));
    }
    let (code, json, _) = run(&["construct", s(&c4), "--face", "x4", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["presentation"]["polynomials"].as_array().unwrap().len(), 3);
    assert_eq!(v["report"]["verdict"], "pass");
    assert!(v["report"].get("elapsed_ms").is_none());
}

#[test]
fn construct_with_a_witness_file() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = file(dir.path(), "c4.json", C4);
    let good = file(dir.path(), "w.txt", "# two generators\nx1*x3 + x2*x4\nx2*x4\n");
    let (code, out, _) = run(&["construct", s(&c4), "--face", "x4", "--witness", s(&good)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("size: 3"));

    let bad = file(dir.path(), "bad.txt", "x1*x3\n");
    let (code, _, err) = run(&["construct", s(&c4), "--face", "x4", "--witness", s(&bad)]);
    assert_eq!(code, EXIT_FAIL);
    assert!(err.contains("witness"));

    let garbage = file(dir.path(), "g.txt", "x1**x3\n");
    let (code, _, _) = run(&["construct", s(&c4), "--face", "x4", "--witness", s(&garbage)]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = file(dir.path(), "c4.json", C4);
    let ok = file(dir.path(), "ok.txt", "x1^2*x3 + x2*x4^3\nx2*x4\n");
    assert_eq!(run(&["verify", s(&c4), s(&ok)]).0, EXIT_OK);
    let short = file(dir.path(), "short.txt", "x1*x3\n");
    let (code, out, _) = run(&["verify", s(&c4), s(&short)]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("x2*x4: FAIL"));
    let outside = file(dir.path(), "outside.txt", "x1*x3 + x1\nx2*x4\n");
    let (code, out, _) = run(&["verify", s(&c4), s(&outside)]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("term x1 outside I"));
}

#[test]
fn classify_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let path = file(dir.path(), "path.json", PATH);
    let (_, out, _) = run(&["classify", s(&path)]);
    assert!(out.contains("generalized tree: yes"));
    assert!(out.contains("d-tree: yes"));
    let bd = file(dir.path(), "bd.json", BOUNDARY);
    let (_, out, _) = run(&["classify", s(&bd)]);
    assert!(out.contains("boundary core: yes (r=4"));
    assert!(out.contains("reg I = 4, deg - codim + 1 = 4: equal"));
    let c4 = file(dir.path(), "c4.json", C4);
    let (_, json, _) = run(&["classify", s(&c4), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["generalized_tree"], false);
    assert_eq!(v["boundary_core"], serde_json::Value::Null);
    assert_eq!(v["cycle"], 4);
}

#[test]
fn pipeline_certificates_and_refusal() {
    let dir = tempfile::tempdir().unwrap();
    let path = file(dir.path(), "path.json", PATH);
    let (code, out, _) = run(&["pipeline", s(&path)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("ara I = 2\n"));
    assert!(out.contains("set-theoretic complete intersection: yes"));

    let bb = file(dir.path(), "bb.json", BOUNDARY_BRANCH);
    let (code, json, _) = run(&["pipeline", s(&bb), "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["route"], "boundary core");
    assert_eq!(v["set_theoretic_complete_intersection"], true);
    assert_eq!(v["report"]["verdict"], "pass");

    let c4 = file(dir.path(), "c4.json", C4);
    let (code, out, _) = run(&["pipeline", s(&c4)]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.starts_with("refused:"));
    assert!(out.contains("4-gon") && out.contains("open"));
}

#[test]
fn outputs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = file(dir.path(), "c4.json", C4);
    let bb = file(dir.path(), "bb.json", BOUNDARY_BRANCH);
    let runs: [&[&str]; 4] = [
        &["construct", s(&c4), "--face", "x4", "--format", "json"],
        &["pipeline", s(&bb), "--char", "5"],
        &["classify", s(&bb), "--format", "json"],
        &["check", "--seed", "9", "--count", "15", "--max-vertices", "5"],
    ];
    for args in runs {
        assert_eq!(run(args), run(args), "{args:?}");
    }
}

#[test]
fn timing_is_opt_in() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = file(dir.path(), "c4.json", C4);
    let (_, json, _) = run(&["construct", s(&c4), "--face", "x4", "--format", "json", "--timing"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v["report"]["elapsed_ms"].is_u64());
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = file(dir.path(), "c4.json", C4);
    assert_eq!(run(&["betti", s(&c4), "--char", "6"]).0, EXIT_USAGE);
    assert_eq!(run(&["construct", s(&c4), "--face", "x4", "--case", "21"]).0, EXIT_USAGE);
    assert_eq!(run(&["construct", s(&c4), "--face", "x4", "--case", "7"]).0, EXIT_USAGE);
    assert_eq!(run(&["info", "/nonexistent/file.json"]).0, EXIT_USAGE);
    let broken = file(dir.path(), "broken.json", "{\"vertices\": [");
    let (code, _, err) = run(&["info", s(&broken)]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("parse error"));
    assert_eq!(run(&["--help"]).0, EXIT_OK);
    assert_eq!(run(&[]).0, EXIT_USAGE);
}

#[test]
fn forced_cases() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = file(dir.path(), "c4.json", C4);
    let (code, out, _) = run(&["construct", s(&c4), "--face", "x4", "--case", "22", "--char", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("# case22"));
    // Case 1 needs h + 1 > t, which fails here
    let (code, _, err) = run(&["construct", s(&c4), "--face", "x4", "--case", "1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("case guard"));
}

#[test]
fn check_suite_reports_seed() {
    let (code, out, _) = run(&["check", "--seed", "3", "--count", "30", "--char", "3"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.starts_with("seed: 3\nfield: GF(3)\n"));
    let (_, json, _) = run(&["check", "--seed", "3", "--count", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["seed"], 3);
    assert_eq!(v["properties"].as_array().unwrap().len(), 3);
}

#[test]
fn exit_code_constants_are_distinct() {
    let codes = [EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE];
    assert_eq!(codes, [0, 1, 2, 3]);
}
