//! Runs the built binary: exit codes, output formats, byte-stable JSON.

use std::path::Path;
use std::process::Command;

const FIVE_OPEN: &str =
    r#"{"points":4,"labels":["i","j","k","l"],"opens":[[],["j","l"],["i","j","l"],["j","k","l"],["i","j","k","l"]]}"#;

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_scstar")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn classify_text_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let space = write(dir.path(), "x.json", FIVE_OPEN);
    let (code, text, _) = run(&["classify", &space, "j,l"]);
    assert_eq!(code, 0);
    assert!(text.contains("subset: {j,l}"));
    let (code, json, _) = run(&["--format", "json", "classify", &space, "1,3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["command"], "classify");
    assert_eq!(v["subset"], "{j,l}");
    assert!(v["labels"].as_array().unwrap().iter().any(|l| l == "Open"));
}

#[test]
fn json_output_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let space = write(dir.path(), "x.json", FIVE_OPEN);
    for args in [
        vec!["--format", "json", "families", space.as_str()],
        vec!["--format", "json", "normality", space.as_str()],
        vec!["--format", "json", "sweep", "X3", "--max-points", "4", "--cap", "3"],
    ] {
        let first = run(&args);
        assert_eq!(first, run(&args), "{args:?}");
    }
}

#[test]
fn sweep_exit_codes() {
    let (code, text, _) = run(&["sweep", "C1", "--max-points", "3"]);
    assert_eq!(code, 0);
    assert!(text.contains("0 counterexamples"));
    assert!(text.contains("1+4+29"));
    // no four-point witness exists below four points, which is a finding
    let (code, _, _) = run(&["sweep", "X3", "--max-points", "3"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["sweep", "X1", "--max-points", "2"]);
    assert_eq!(code, 0);
    let (code, _, err) = run(&["sweep", "C99"]);
    assert_eq!(code, 2);
    assert!(err.contains("C99"));
    let (code, _, _) = run(&["sweep", "C10", "--max-points", "5"]);
    assert_eq!(code, 2);
}

#[test]
fn invalid_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing_full = write(dir.path(), "a.json", r#"{"points":2,"opens":[[0]]}"#);
    let malformed = write(dir.path(), "b.json", "{\"points\": 2,\n\"opens\": [[0]");
    let good = write(dir.path(), "c.json", FIVE_OPEN);
    for args in [
        vec!["classify", missing_full.as_str(), "0"],
        vec!["classify", malformed.as_str(), "0"],
        vec!["classify", good.as_str(), "q"],
        vec!["classify", good.as_str(), "9"],
        vec!["families", good.as_str(), "--label", "nonsense"],
        vec!["theorem24", "/nonexistent/space.json"],
        vec!["enumerate", "--points", "6"],
        vec!["enumerate", "--points", "5", "--method", "brute"],
        vec!["classify"],
    ] {
        let (code, _, err) = run(&args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.contains("panicked"), "{args:?}: {err}");
    }
    let (_, _, err) = run(&["classify", &malformed, "0"]);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn mapcheck_reports_both_statements() {
    let dir = tempfile::tempdir().unwrap();
    let partition = r#"{"points":4,"opens":[[],[0],[1],[0,1],[2,3],[0,2,3],[1,2,3],[0,1,2,3]]}"#;
    let quotient = r#"{"points":3,"opens":[[],[0],[1,2],[0,1,2]]}"#;
    let map = write(
        dir.path(),
        "f.json",
        &format!(r#"{{"domain":{partition},"codomain":{quotient},"assignment":[0,0,1,2]}}"#),
    );
    let (code, json, _) = run(&["--format", "json", "mapcheck", &map]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["properties"]["surjective"], true);
    assert!(v["theorem_3_1"]["verdict"].is_string());
    assert!(v["theorem_3_2"]["verdict"].is_string());
}

#[test]
fn enumerate_counts() {
    let (code, json, _) = run(&["--format", "json", "enumerate", "--points", "3", "--count-only"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["count"], 29);
    let (_, text, _) = run(&["enumerate", "--points", "4", "--count-only", "--up-to-homeomorphism"]);
    assert!(text.starts_with("33 "));
}

#[test]
fn strict_flag_is_echoed() {
    let (_, json, _) = run(&["--format", "json", "--strict-paper", "--ralpha-defn", "alpha-int-alpha-cl", "sweep", "C9"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["settings"]["sandwich"], "closure-of-i");
    assert_eq!(v["settings"]["neighborhoods"], "sc-star-open-only");
    assert_eq!(v["settings"]["regular_alpha"], "alpha-int-alpha-cl");
}
