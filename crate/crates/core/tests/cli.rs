use std::process::{Command, Output};

use fibstab::cli::parse_report;
use tempfile::TempDir;

const HIRZEBRUCH: &str = r#"{"base": {"factors": [1], "polarization": [1]}, "bundle": {"summands": [[0], [-1]]}}"#;
const TRIVIAL: &str = r#"{"base": {"factors": [1], "polarization": [1]}, "bundle": {"summands": [[1], [1]]}}"#;

fn fibstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibstab")).args(args).output().unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn analyze_exit_codes() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.json", HIRZEBRUCH);
    let t = write(&dir, "t.json", TRIVIAL);
    assert_eq!(fibstab(&["analyze", &h]).status.code(), Some(0));
    assert_eq!(fibstab(&["analyze", &h, "--fail-on-unstable"]).status.code(), Some(2));
    assert_eq!(fibstab(&["analyze", &t, "--fail-on-unstable"]).status.code(), Some(0));
    assert_eq!(fibstab(&["analyze", "/does/not/exist.json"]).status.code(), Some(1));
    let bad = write(&dir, "bad.json", r#"{"base": {"factors": [1], "polarization": [1]}, "bundle": {"summands": [[0], [1, 2]]}}"#);
    let out = fibstab(&["analyze", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bundle.summands[1]"));
    assert_eq!(fibstab(&["analyze", &h, "--max-k", "3"]).status.code(), Some(1));
}

#[test]
fn analyze_json_is_exact_and_deterministic() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.json", HIRZEBRUCH);
    let a = fibstab(&["analyze", &h, "--json", "--oracle-check"]);
    let b = fibstab(&["analyze", &h, "--json", "--oracle-check"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains(r#""W1": {"#));
    let r = parse_report(&text).unwrap();
    assert_eq!(r.degenerations[0].verdict, "UnstableCertificate");
    let w1 = r.degenerations[0].w1.to_rational().unwrap();
    assert_eq!(w1, fibstab::arith::rat(-2, 3));
    assert!(!r.identities_checked.is_empty());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["degenerations"][0]["W1"], serde_json::json!({"num": -2, "den": 3}));
}

#[test]
fn analyze_text_has_certificate() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.json", HIRZEBRUCH);
    let out = String::from_utf8(fibstab(&["analyze", &h]).stdout).unwrap();
    assert!(out.contains("certificate: W0 = 0 and W1 = -2/3 < 0 for F = {O}"));
    assert!(out.contains("summary: unstable"));
}

#[test]
fn df_subcommand() {
    let out = fibstab(&["df", "--normal-cone", "2", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["df_intersection"], serde_json::json!({"num": 1, "den": 2}));
    assert_eq!(v["minimum_norm"], serde_json::json!({"num": 1, "den": 2}));
    let out = String::from_utf8(fibstab(&["df", "--weights", "1,0"]).stdout).unwrap();
    assert!(out.contains("DF (intersection) = 0"));
    assert_eq!(fibstab(&["df"]).status.code(), Some(1));
    assert_eq!(fibstab(&["df", "--weights", "1,x"]).status.code(), Some(1));
}

#[test]
fn oracle_subcommand() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.json", HIRZEBRUCH);
    let out = fibstab(&["oracle", &h, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!v.to_string().contains('.'));
    let text = String::from_utf8(fibstab(&["oracle", &h]).stdout).unwrap();
    assert!(text.contains("w(j,k)"));
}
