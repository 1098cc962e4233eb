use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cmreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmreg")).args(args).output().unwrap()
}

fn instance(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "instances", name].iter().collect();
    path.to_str().unwrap().to_string()
}

fn scratch(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("cmreg-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_json_report() {
    let out = cmreg(&["analyze", &instance("semigroup_345.txt"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((v["e0"].as_i64(), v["e1"].as_i64(), v["b"].as_i64()), (Some(3), Some(2), Some(1)));
    assert_eq!((v["p"].as_i64(), v["reg"].as_i64(), v["bound_main"].as_i64()), (Some(1), Some(2), Some(3)));
    assert_eq!(v["numerator"], serde_json::json!([2, 0, 1]));
    assert_eq!(v["g_cm"], false);
    assert_eq!(v["kind"], "semigroup");
    assert_eq!(v["depthM"], 1);
}

#[test]
fn analyze_table_and_window() {
    let out = cmreg(&["analyze", &instance("staircase_depth0.txt"), "--table", "--window", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("reg reg1     4 2"), "{text}");
    assert!(text.contains("   8     3     0     0"), "{text}");
}

#[test]
fn reports_are_deterministic() {
    let a = cmreg(&["analyze", &instance("staircase_depth0.txt"), "--json"]);
    let b = cmreg(&["analyze", &instance("staircase_depth0.txt"), "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let a = cmreg(&["explore", "--count", "30", "--seed", "9", "--json"]);
    let b = cmreg(&["explore", "--count", "30", "--seed", "9", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn declared_b() {
    let path = scratch("declared.txt", "kind: semigroup\nsemigroup: 2 3\nideal: 4 5\n");
    let out = cmreg(&["analyze", &path, "--json", "--declared-b", "1"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((v["b"].as_i64(), v["classifier_b"].as_i64(), v["b_maximal"].as_bool()), (Some(2), Some(1), Some(false)));
    assert_eq!(cmreg(&["analyze", &path, "--declared-b", "3"]).status.code(), Some(2));
}

#[test]
fn corpus_passes() {
    let out = cmreg(&["corpus"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("49/49 rows pass"));
}

#[test]
fn explore_families() {
    for family in ["semigroup", "bivariate", "mixed"] {
        let out = cmreg(&["explore", "--count", "40", "--seed", "3", "--family", family]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        assert!(stdout(&out).contains("40 instances, no violations"));
    }
}

#[test]
fn series_subcommand() {
    let out = cmreg(&["series", "--numerator", "2,0,1", "--dim", "1", "--terms", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(2 + z^2)/(1-z)"));
    assert!(text.contains("e1          2"));
    assert!(text.contains("postulation 1"));
    assert!(text.contains("h           2 2 3 3 3"));
    // (1 - z)/(1 - z) normalizes to the dimension-zero series 1
    let out = cmreg(&["series", "--numerator", "1,-1", "--dim", "1"]);
    assert!(stdout(&out).contains("series      1\n"), "{}", stdout(&out));
    assert!(stdout(&out).contains("postulation 0"));
    let out = cmreg(&["series", "--numerator", "1", "--dim", "1"]);
    assert!(stdout(&out).contains("postulation -1"));
    let out = cmreg(&["series", "--numerator", "0", "--dim", "1"]);
    assert!(stdout(&out).contains("postulation -inf"));
}

#[test]
fn oracle_subcommand() {
    let out = cmreg(&["oracle", &instance("cusp.txt"), "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn validation_errors_exit_2() {
    let path = scratch("parse.txt", "kind: semigroup\nsemigroup: 3 x 5\nideal: 3\n");
    let out = cmreg(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 14"));
    let path = scratch("dim0.txt", "kind: bivariate\nring_ideal: 2 0 ; 0 2\nideal: 1 0 ; 0 1\n");
    assert_eq!(cmreg(&["analyze", &path]).status.code(), Some(2));
    let path = scratch("nonprimary.txt", "kind: bivariate\nring_ideal: 0 2\nideal: 0 1\n");
    assert_eq!(cmreg(&["analyze", &path]).status.code(), Some(2));
    assert_eq!(cmreg(&["analyze", "/nonexistent/instance.txt"]).status.code(), Some(2));
    assert_eq!(cmreg(&["explore", "--family", "cubic"]).status.code(), Some(2));
}
