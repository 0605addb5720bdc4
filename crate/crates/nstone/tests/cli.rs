//! Runs the built binary end to end.

use std::path::PathBuf;
use std::process::{Command, Output};

fn nstone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nstone")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nstone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn analyze_reports_classification() {
    let o = nstone(&["analyze", "sym_inv:2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("table: 7 elements, 4 idempotents"), "{text}");
    assert!(text.contains("boolean: yes"), "{text}");
    assert!(text.contains("filters: 6 proper, 4 prime, 4 ultra, 4 tight"), "{text}");
}

#[test]
fn duality_suite_passes() {
    let o = nstone(&["verify", "duality", "--input", "chain:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.is_empty() || l.starts_with("PASS") || l.starts_with("suite")));
}

#[test]
fn every_suite_passes_in_json() {
    for suite in ["duality", "booleanization", "paterson", "tight", "coverage-axioms", "nucleus"] {
        let o = nstone(&["verify", suite, "sym_inv:2", "--json", "--oracle"]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["passed"], serde_json::Value::Bool(true), "{suite}");
    }
}

#[test]
fn prime_groupoid_dot_has_four_arrows() {
    let o = nstone(&["groupoid", "prime", "sym_inv:2", "--export", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("label=").count(), 4, "{text}");
    assert_eq!(text.matches("->").count(), 2, "{text}");
}

#[test]
fn output_is_deterministic() {
    for args in [&["complete", "D", "sym_inv:2", "--json"][..], &["booleanize", "chain:3"], &["filters", "brandt:cyclic:1:2"]] {
        let first = nstone(args);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        assert_eq!(first.stdout, nstone(args).stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["analyze", "nope"][..], &["analyze"], &["verify", "nonsense", "chain:3"], &["groupoid", "plain", "chain:3", "--patch"]] {
        let o = nstone(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn file_inputs_round_trip() {
    let json = nstone(&["export", "json", "sym_inv:2"]);
    assert_eq!(json.status.code(), Some(0));
    let path = scratch("i2.json");
    std::fs::write(&path, &json.stdout).unwrap();
    let from_file = nstone(&["analyze", path.to_str().unwrap()]);
    assert_eq!(from_file.status.code(), Some(0));
    let from_id = stdout(&nstone(&["analyze", "sym_inv:2"]));
    assert_eq!(stdout(&from_file).lines().take(5).collect::<Vec<_>>(), from_id.lines().take(5).collect::<Vec<_>>());

    let text = scratch("chain.ist");
    std::fs::write(&text, "# three element chain\n3\n0 0 0\n0 1 1\n0 1 2\n").unwrap();
    let o = nstone(&["analyze", text.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("table: 3 elements, 3 idempotents"));

    let bad = scratch("bad.ist");
    std::fs::write(&bad, "2\n0 0\n0 1 1\n").unwrap();
    assert_eq!(nstone(&["analyze", bad.to_str().unwrap()]).status.code(), Some(2));
}
