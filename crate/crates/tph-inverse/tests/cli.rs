//! End-to-end tests of the `tph` binary: file parsing, exit codes and the
//! exact JSON output contract.

mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tph_inverse::io::{MatrixFile, ProblemFile, ResultFile};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn tph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tph"))
        .args(args)
        .env_remove("TPH_CHECK")
        .output()
        .expect("binary runs")
}

fn stdout_json<T: serde::de::DeserializeOwned>(out: &Output) -> T {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad json ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn analyze_reports_the_worked_indices() {
    let out = tph(&["analyze", data("worked_problem.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let file: ResultFile = stdout_json(&out);
    assert_eq!(file.indices, vec![-1, 0, 0, 1]);
    assert_eq!(file.alpha, 0);
    assert_eq!(file.omega, 0);
    assert!(file.pinv.is_none());
    let distinct = file.distinct.unwrap();
    assert_eq!(distinct.len(), 3);
    assert_eq!((distinct[1].lambda, distinct[1].nu), (0, 2));
}

#[test]
fn analyze_scalar_problem() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scalar.json");
    let prob = tph_inverse::TphProblem::scalar(0, 0, &[2], &[1]).unwrap();
    ProblemFile::from_problem(&prob).write(&path).unwrap();
    let out = tph(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let file: ResultFile = stdout_json(&out);
    assert_eq!(file.indices, vec![0, 0, 0, 0]);
    assert_eq!(file.alpha, 0);
    assert_eq!(file.omega, 0);
}

#[test]
fn analyze_rejects_malformed_rationals_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"p":1,"q":1,"n":0,"m":0,"a":[[["1/0"]]],"b":[[["1"]]]}"#,
    )
    .unwrap();
    let out = tph(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_rejects_the_zero_sequence_with_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.json");
    let prob = tph_inverse::TphProblem::scalar(1, 1, &[0, 0, 0], &[0, 0, 0]).unwrap();
    ProblemFile::from_problem(&prob).write(&path).unwrap();
    let out = tph(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn pinv_plus_with_check_writes_the_exact_inverse() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("result.json");
    let out = tph(&[
        "pinv",
        data("worked_problem.json").to_str().unwrap(),
        "--sign",
        "plus",
        "--check",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let file: ResultFile = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(file.status, "ok");
    assert_eq!(file.sign.as_deref(), Some("plus"));
    assert_eq!(file.invertible, Some(true));
    let grid = file.pinv.unwrap();
    assert_eq!(grid[0], vec!["1/4", "1/2", "0", "0"]);
    assert_eq!(grid[3], vec!["1/20", "-1/10", "-1/5", "2/5"]);
    assert!(file.checks.values().all(|&v| v));
}

#[test]
fn pinv_minus_with_check_passes_and_reports_singularity() {
    let out = tph(&[
        "pinv",
        data("worked_problem.json").to_str().unwrap(),
        "--sign",
        "minus",
        "--check",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let file: ResultFile = stdout_json(&out);
    assert_eq!(file.invertible, Some(false));
    assert_eq!(file.checks.get("g_inverse"), Some(&true));
    assert!(!file.checks.contains_key("left_inverse"));
}

#[test]
fn blockwise_output_is_byte_identical_to_direct() {
    let path = data("worked_problem.json");
    for sign in ["plus", "minus"] {
        let direct = tph(&["pinv", path.to_str().unwrap(), "--sign", sign]);
        let blockwise = tph(&[
            "pinv",
            path.to_str().unwrap(),
            "--sign",
            sign,
            "--method",
            "blockwise",
        ]);
        assert_eq!(direct.status.code(), Some(0));
        assert_eq!(blockwise.status.code(), Some(0));
        assert_eq!(direct.stdout, blockwise.stdout, "sign {sign}");
    }
}

#[test]
fn pinv_defective_input_exits_3_unless_fallback_allowed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("defective.json");
    let prob = tph_inverse::TphProblem::scalar(1, 1, &[2, 1, -1], &[-1, 1, 2]).unwrap();
    ProblemFile::from_problem(&prob).write(&path).unwrap();
    let out = tph(&["pinv", path.to_str().unwrap(), "--sign", "plus"]);
    assert_eq!(out.status.code(), Some(3));

    let out = tph(&[
        "pinv",
        path.to_str().unwrap(),
        "--sign",
        "plus",
        "--allow-transpose-fallback",
        "--check",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let file: ResultFile = stdout_json(&out);
    assert_eq!(file.checks.get("g_inverse"), Some(&true));
}

#[test]
fn tph_check_env_var_forces_checking() {
    let out = Command::new(env!("CARGO_BIN_EXE_tph"))
        .args(["pinv", data("worked_problem.json").to_str().unwrap(), "--sign", "plus"])
        .env("TPH_CHECK", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let file: ResultFile = stdout_json(&out);
    assert!(!file.checks.is_empty());
    assert!(file.checks.values().all(|&v| v));
}

#[test]
fn verify_accepts_the_reference_one_inverse() {
    let out = tph(&[
        "verify",
        data("worked_t_minus_h.json").to_str().unwrap(),
        data("worked_minus_ginverse.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = stdout_json(&out);
    assert_eq!(report["is_g_inverse"], true);
    assert_eq!(report["rank"], 3);
    assert_eq!(report["invertible"], false);
}

#[test]
fn verify_rejects_a_mismatched_candidate() {
    let out = tph(&[
        "verify",
        data("worked_t_plus_h.json").to_str().unwrap(),
        data("worked_minus_ginverse.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
    let report: serde_json::Value = stdout_json(&out);
    assert_eq!(report["is_g_inverse"], false);
}

#[test]
fn verify_zero_against_zero_holds() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let x = dir.path().join("x.json");
    let zero = MatrixFile {
        rows: 2,
        cols: 3,
        entries: vec![vec!["0".into(); 3]; 2],
    };
    let zero_t = MatrixFile {
        rows: 3,
        cols: 2,
        entries: vec![vec!["0".into(); 2]; 3],
    };
    std::fs::write(&a, serde_json::to_string(&zero).unwrap()).unwrap();
    std::fs::write(&x, serde_json::to_string(&zero_t).unwrap()).unwrap();
    let out = tph(&["verify", a.to_str().unwrap(), x.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_shape_mismatch_exits_1() {
    let out = tph(&[
        "verify",
        data("worked_t_minus_h.json").to_str().unwrap(),
        data("worked_problem.json").to_str().unwrap(),
    ]);
    // the problem file is not a matrix file at all: parse error
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let x = dir.path().join("x.json");
    let wrong = MatrixFile {
        rows: 2,
        cols: 2,
        entries: vec![vec!["0".into(); 2]; 2],
    };
    std::fs::write(&x, serde_json::to_string(&wrong).unwrap()).unwrap();
    let out = tph(&[
        "verify",
        data("worked_t_minus_h.json").to_str().unwrap(),
        x.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn oracle_computes_the_dense_one_inverse() {
    let out = tph(&["oracle", data("worked_t_plus_h.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let file: MatrixFile = stdout_json(&out);
    let x = file.to_matrix().unwrap();
    assert_eq!(x, common::worked_plus_inverse());
}

#[test]
fn oracle_then_verify_roundtrip_on_a_singular_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let x_path = dir.path().join("x.json");
    let out = tph(&[
        "oracle",
        data("worked_t_minus_h.json").to_str().unwrap(),
        "--out",
        x_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = tph(&[
        "verify",
        data("worked_t_minus_h.json").to_str().unwrap(),
        x_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_1() {
    let out = tph(&["pinv", "nonexistent.json"]);
    // missing required --sign
    assert_eq!(out.status.code(), Some(1));
    let out = tph(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn missing_file_is_a_parse_error() {
    let out = tph(&["analyze", "definitely-not-here.json"]);
    assert_eq!(out.status.code(), Some(2));
}
