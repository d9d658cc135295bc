use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_thinquiv"))
}

fn quiver(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../quivers")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn run_file(args: &[&str], file: &str) -> Output {
    let path = quiver(file);
    let mut all: Vec<&str> = args.to_vec();
    all.insert(2, path.to_str().unwrap());
    run(&all)
}

#[test]
fn a2_filters() {
    let out = run_file(&["quiver", "filters"], "a2.quiver");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS filters: 3"), "{text}");
    assert!(text.contains("{}\n{1}\n{0,1}\n"), "{text}");
}

#[test]
fn kronecker_one_cycle_class() {
    let out = run_file(&["quiver", "cycles"], "kronecker.quiver");
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS primitive cycle classes: 1"));
}

#[test]
fn q00000_dot_sizes() {
    let out = run_file(&["quiver", "dot"], "q00000.quiver");
    assert!(out.status.success());
    let text = stdout(&out);
    let nodes = text
        .lines()
        .filter(|l| l.trim_end().ends_with("\";"))
        .count();
    let edges = text.lines().filter(|l| l.contains("->")).count();
    assert_eq!((nodes, edges), (6, 10), "{text}");
}

#[test]
fn canonical_is_idempotent() {
    let first = stdout(&run_file(&["quiver", "canonical"], "kronecker.quiver"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.quiver");
    std::fs::write(&path, &first).unwrap();
    let second = stdout(&run(&["quiver", "canonical", path.to_str().unwrap()]));
    assert_eq!(first, second);
}

#[test]
fn cyclic_file_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("loop.quiver");
    std::fs::write(
        &path,
        r#"{"vertices":["0"],"arrows":[{"id":"a","from":"0","to":"0"}]}"#,
    )
    .unwrap();
    let out = run(&["quiver", "validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL valid acyclic quiver"));
}

#[test]
fn syntax_error_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.quiver");
    std::fs::write(&path, "{\n  \"vertices\": [\"0\",\n}").unwrap();
    let out = run(&["quiver", "validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3, column"), "{err}");
}

#[test]
fn a2_decompose() {
    let out = run_file(&["cone", "decompose", "--vector", "-1,1"], "a2.quiver");
    assert!(out.status.success());
    assert!(stdout(&out).contains("\nalpha:1\n"));
}

#[test]
fn a2_member_no() {
    let out = run_file(&["cone", "member", "--vector=1,-1"], "a2.quiver");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\nNO\n"), "{text}");
    assert!(text.contains("filter {1}"), "{text}");
}

#[test]
fn dimension_mismatch_is_an_error() {
    let out = run_file(&["cone", "member", "--vector", "1,0,-1"], "a2.quiver");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kronecker_brute_check() {
    let out = run_file(&["cone", "brute-check", "--bound", "3"], "kronecker.quiver");
    assert!(out.status.success());
    assert!(stdout(&out).contains("\nEQUAL\n"));
}

#[test]
fn box_limit_from_env() {
    let path = quiver("q00000.quiver");
    let out = bin()
        .args(["cone", "brute-check", path.to_str().unwrap()])
        .env("THINQUIV_MAX_BOX_POINTS", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("bound is 10"));
}

const P12345: [&str; 10] = ["--p", "1", "--q", "2", "--r", "3", "--s", "4", "--t", "5"];
const P00000: [&str; 10] = ["--p", "0", "--q", "0", "--r", "0", "--s", "0", "--t", "0"];

fn family(action: &str, params: &[&str]) -> Output {
    let mut args = vec!["family", action];
    args.extend_from_slice(params);
    run(&args)
}

#[test]
fn family_all_strict() {
    let out = family("all", &P12345);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS cycle classes = ±v1..v26: 26"));
}

#[test]
fn family_all_degenerate() {
    let out = family("all", &P00000);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn family_rank_11111() {
    let out = family(
        "rank",
        &["--p", "1", "--q", "1", "--r", "1", "--s", "1", "--t", "1"],
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("\n6\n"));
}

#[test]
fn family_invalid_params() {
    let out = family(
        "build",
        &["--p", "2", "--q", "1", "--r", "3", "--s", "4", "--t", "5"],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn family_cycles_non_strict() {
    let out = family("cycles", &P00000);
    assert!(out.status.success());
}

#[test]
fn json_mirrors_text() {
    let text = stdout(&family("ideal", &P12345));
    let out = run(&[
        "--format", "json", "family", "ideal", "--p", "1", "--q", "2", "--r", "3", "--s", "4",
        "--t", "5",
    ]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = value["checks"].as_array().unwrap();
    let lines = text
        .lines()
        .filter(|l| l.starts_with("PASS ") || l.starts_with("FAIL "))
        .count();
    assert_eq!(checks.len(), lines);
    assert_eq!(value["passed"], true);
}

#[test]
fn orbit_deterministic() {
    let mut args = vec!["family", "orbit", "--seed", "7", "--samples", "20"];
    args.extend_from_slice(&P12345);
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_tuple_counts() {
    let out = run(&["verify-paper", "--max", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("PASS: 1 tuples, 0 failed\n"));

    let out = run(&[
        "--format",
        "json",
        "verify-paper",
        "--max",
        "1",
        "--samples",
        "10",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["tuples"], 6);
}

#[test]
fn default_sweep_passes() {
    let out = run(&["verify-paper"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with('(')).count(), 21);
    assert!(text.ends_with("PASS: 21 tuples, 0 failed\n"));
}
