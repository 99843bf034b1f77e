//! End-to-end tests of the command-line interface: exit-code contract,
//! text/JSON agreement, determinism, and the bundled corpus.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relparabose"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn corpus(file: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(file)
        .display()
        .to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn identities_passes_with_four_records() {
    let out = run(&["identities"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 4);
    assert!(text.contains("summary: 4 passed, 0 failed"));

    let json_out = run(&["identities", "--json"]);
    assert_eq!(json_out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    let records = json["records"].as_array().unwrap();
    assert_eq!(records.len(), 4);
    // text and JSON agree on statuses
    assert!(records.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn check_pbf_verifies_the_small_algebra() {
    let out = run(&["check-pbf", "--m", "1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("dimension is 12"));
    assert!(text.contains("braided Jacobi: 1728 tuples checked, 0 violations"));
}

#[test]
fn check_pbf_with_oracle() {
    let out = run(&["check-pbf", "--m", "2", "--n", "2", "--oracle", "--cutoff", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("dimension is 40"));
    assert!(text.contains("oracle bracket table: 1600 entries"));
}

#[test]
fn check_pbf_rejects_zero_modes() {
    let out = run(&["check-pbf", "--m", "0", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_pbf_dump_round_trips() {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("pbf-1-1.json");
    let out = run(&["check-pbf", "--m", "1", "--n", "1", "--dump-algebra", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed = relparabose::format::ColorAlgebraFile::parse(&text).unwrap();
    let alg = parsed.to_algebra().unwrap();
    assert_eq!(alg.dimension(), 12);
    assert!(alg.check_jacobi().passed());
}

#[test]
fn reports_are_deterministic() {
    let first = run(&["check-pbf", "--m", "1", "--n", "1", "--json"]);
    let second = run(&["check-pbf", "--m", "1", "--n", "1", "--json"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn realize_gl11_with_hopf() {
    let out = run(&["realize", &corpus("gl11.json"), "--hopf"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("J(E11) = (1/2)·{B1+,B1-}"));
    assert!(text.contains("J(E12) = (1/2)·{F1-,B1+}"));
    assert!(text.contains("Δ(J(E12)) = (J⊗J)(Δ(E12))"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn realize_sl2_in_paraboson_mode() {
    let out = run(&["realize", &corpus("sl2-adjoint.json"), "--mode", "paraboson"]);
    assert_eq!(out.status.code(), Some(0), "stdout: {}", stdout(&out));
    assert!(stdout(&out).contains("J(H)"));
}

#[test]
fn realize_remaining_corpus_algebras() {
    for (file, mode) in [
        ("u1.json", "paraboson"),
        ("u1.json", "mixed"),
        ("abelian-super.json", "mixed"),
        ("sl2-adjoint.json", "parafermion"),
        ("sl2-adjoint.json", "mixed"),
    ] {
        let out = run(&["realize", &corpus(file), "--mode", mode, "--hopf"]);
        assert_eq!(out.status.code(), Some(0), "{file} --mode {mode}: {}", stdout(&out));
    }
}

#[test]
fn realize_rejects_broken_fixtures_with_exit_3() {
    let out = run(&["realize", &corpus("broken-jacobi.json")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("super Jacobi"));

    let out = run(&["realize", &corpus("broken-blocks.json")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("nonzero A block"));
}

#[test]
fn realize_rejects_superalgebras_in_corollary_modes() {
    let out = run(&["realize", &corpus("gl11.json"), "--mode", "paraboson"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn realize_reports_missing_files_as_usage_errors() {
    let out = run(&["realize", "no-such-file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_hopf_cli() {
    let out = run(&["check-hopf", "--m", "1", "--n", "1", "--max-len", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("hopf axioms over words up to length 2"));

    let unit_only = run(&["check-hopf", "--m", "1", "--n", "1", "--max-len", "0"]);
    assert_eq!(unit_only.status.code(), Some(0));

    let capped = run(&["check-hopf", "--m", "1", "--n", "1", "--max-len", "99"]);
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn json_and_text_statuses_agree_on_a_failing_run() {
    let text_out = run(&["realize", &corpus("broken-jacobi.json")]);
    let json_out = run(&["realize", &corpus("broken-jacobi.json"), "--json"]);
    assert_eq!(text_out.status.code(), json_out.status.code());
    let text = stdout(&text_out);
    let json: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    let failed_json =
        json["records"].as_array().unwrap().iter().filter(|r| r["status"] == "fail").count();
    assert_eq!(text.matches("FAIL").count(), failed_json);
    assert_eq!(json["summary"]["failed"].as_u64().unwrap() as usize, failed_json);
}
