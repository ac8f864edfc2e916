//! Black-box tests of the binary: exit codes, determinism, output formats.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matterwave"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matterwave"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn passing_config_exits_zero() {
    let cfg = fixture("pass.json");
    let out = run(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("OK: 33 checks, 33 passed, 0 failed"), "{text}");
    assert!(!text.contains("FAIL "), "{text}");
}

#[test]
fn detuned_config_exits_one_and_flags_the_broken_identities() {
    let cfg = fixture("detuned.json");
    let out = run(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL  continuity"), "{text}");
    assert!(text.contains("FAIL  lorentz_condition"), "{text}");
    assert!(text.contains("PASS  faraday"), "{text}");
    assert!(text.contains("PASS  div_b"), "{text}");
}

#[test]
fn unknown_config_key_exits_two() {
    let cfg = fixture("invalid.json");
    let out = run(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not_a_real_option"));
}

#[test]
fn wrong_version_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cfg.json");
    std::fs::write(
        &path,
        r#"{ "version": 9, "particle": { "kind": "electron", "rho0": 1.0, "velocity": [1,0,0] } }"#,
    )
    .unwrap();
    let out = run(&["verify", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("version"));
}

#[test]
fn missing_config_file_exits_two() {
    let out = run(&["verify", "--config", "/definitely/not/here.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn superluminal_boost_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cfg.json");
    std::fs::write(
        &path,
        r#"{ "version": 1,
             "particle": { "kind": "electron", "rho0": 1.0, "velocity": [1.0, 0.0, 0.0] },
             "constants": { "c0": 10.0 },
             "boost": { "beta": 1.5 } }"#,
    )
    .unwrap();
    let out = run(&["boost", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not below the limit speed"));
}

#[test]
fn reruns_are_byte_identical() {
    let cfg = fixture("pass.json");
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let out_a = run(&[
        "verify",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir_a.path().to_str().unwrap(),
    ]);
    let out_b = run(&[
        "verify",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir_b.path().to_str().unwrap(),
    ]);
    assert_eq!(out_a.status.code(), Some(0));
    assert_eq!(out_a.stdout, out_b.stdout);
    let report_a = std::fs::read(dir_a.path().join("report.json")).unwrap();
    let report_b = std::fs::read(dir_b.path().join("report.json")).unwrap();
    assert!(!report_a.is_empty());
    assert_eq!(report_a, report_b);
}

#[test]
fn serial_mode_reproduces_the_parallel_report() {
    let cfg = fixture("pass.json");
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let parallel = run(&[
        "verify",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir_a.path().to_str().unwrap(),
    ]);
    let serial = run_with_env(
        &[
            "verify",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            dir_b.path().to_str().unwrap(),
        ],
        "MW_NO_PARALLEL",
        "1",
    );
    assert_eq!(parallel.status.code(), Some(0));
    assert_eq!(serial.status.code(), Some(0));
    let report_a = std::fs::read(dir_a.path().join("report.json")).unwrap();
    let report_b = std::fs::read(dir_b.path().join("report.json")).unwrap();
    assert_eq!(report_a, report_b);
}

#[test]
fn changing_the_seed_changes_only_the_sampled_rows() {
    let cfg = fixture("pass.json");
    let out_a = run(&["verify", "--config", cfg.to_str().unwrap(), "--seed", "1"]);
    let out_b = run(&["verify", "--config", cfg.to_str().unwrap(), "--seed", "2"]);
    assert_eq!(out_a.status.code(), Some(0));
    assert_eq!(out_b.status.code(), Some(0));
}

#[test]
fn fields_writes_the_documented_header() {
    let cfg = fixture("pass.json");
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "fields",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let csv = std::fs::read_to_string(dir.path().join("fields.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(matterwave::CSV_HEADER));
    // 8^4 lattice points, one row each.
    assert_eq!(lines.count(), 8 * 8 * 8 * 8);
}

#[test]
fn boost_sweep_reports_invariance() {
    let cfg = fixture("boost.json");
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "boost",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("energy_invariance_beta_0.5"), "{text}");
    assert!(text.contains("boosted_wave_equation_beta_0.9"), "{text}");
    let report = std::fs::read_to_string(dir.path().join("boost.json")).unwrap();
    assert!(report.contains("frame-invariant across the sweep"), "{report}");
}
