//! File-driven command layer used by the `tph` binary: parse problem or
//! matrix files, run the pipeline or the oracle, emit JSON reports, map
//! errors to stable exit codes.

use std::path::Path;

use crate::assembly::{pinv_tph, Method, PinvOptions};
use crate::error::{Error, Result};
use crate::indices::compute_index_table;
use crate::io::{MatrixFile, ProblemFile, ResultFile};
use crate::oracle::{is_g_inverse, one_inverse_oracle};
use crate::problem::Sign;
use crate::sequence::build_generating_sequence;

pub const EXIT_OK: i32 = 0;
/// Usage errors and shape mismatches between otherwise valid files.
pub const EXIT_USAGE: i32 = 1;
/// Unreadable, malformed or internally inconsistent input files.
pub const EXIT_PARSE: i32 = 2;
/// Structurally unsupported input: zero sequence or positive right defect.
pub const EXIT_UNSUPPORTED: i32 = 3;
/// A requested self-check failed.
pub const EXIT_CHECK: i32 = 4;

/// Maps an error to the exit code contract.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::Json(_) | Error::Io(_) | Error::InvalidProblem(_) => EXIT_PARSE,
        Error::ZeroSequence | Error::DefectUnsupported { .. } => EXIT_UNSUPPORTED,
        _ => EXIT_USAGE,
    }
}

/// Writes a line to stdout, swallowing a broken pipe (the reader went away;
/// not an error for a filter-style tool).
fn print_stdout(text: &str) -> Result<()> {
    use std::io::Write;
    match writeln!(std::io::stdout(), "{text}") {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print_stdout(text)?,
    }
    Ok(())
}

fn report(err: &Error) -> i32 {
    eprintln!("error: {err}");
    exit_code_for(err)
}

/// `analyze`: index table of the problem's generating sequence.
pub fn cmd_analyze(path: &Path, out: Option<&Path>) -> i32 {
    let run = || -> Result<ResultFile> {
        let prob = ProblemFile::read(path)?.to_problem()?;
        let seq = build_generating_sequence(&prob);
        let table = compute_index_table(&seq)?;
        Ok(ResultFile::from_table(&table))
    };
    match run().and_then(|file| emit(&file.to_json()?, out)) {
        Ok(()) => EXIT_OK,
        Err(e) => report(&e),
    }
}

/// `pinv`: generalized inverse of `T + H` or `T - H`, written as a result file.
///
/// The environment variable `TPH_CHECK=1` forces `--check` on.
pub fn cmd_pinv(
    path: &Path,
    sign: Sign,
    method: Method,
    check: bool,
    allow_transpose_fallback: bool,
    out: Option<&Path>,
) -> i32 {
    let check = check || std::env::var("TPH_CHECK").map(|v| v == "1").unwrap_or(false);
    let options = PinvOptions {
        method,
        check,
        allow_transpose_fallback,
    };
    let run = || -> Result<(ResultFile, bool)> {
        let prob = ProblemFile::read(path)?.to_problem()?;
        let result = pinv_tph(&prob, sign, &options)?;
        Ok((ResultFile::from_result(&result), result.checks_passed()))
    };
    match run() {
        Ok((file, checks_passed)) => {
            let json = match file.to_json() {
                Ok(j) => j,
                Err(e) => return report(&e),
            };
            if let Err(e) = emit(&json, out) {
                return report(&e);
            }
            if checks_passed {
                EXIT_OK
            } else {
                eprintln!("error: self-check failed");
                EXIT_CHECK
            }
        }
        Err(e) => report(&e),
    }
}

/// `verify`: checks `A X A = A` for two dense matrix files; prints the full
/// report and returns 0 exactly when the identity holds.
pub fn cmd_verify(path_a: &Path, path_x: &Path) -> i32 {
    let run = || -> Result<bool> {
        let a = MatrixFile::read(path_a)?.to_matrix()?;
        let x = MatrixFile::read(path_x)?.to_matrix()?;
        let rep = is_g_inverse(&a, &x)?;
        let report = serde_json::json!({
            "is_g_inverse": rep.is_g_inverse,
            "satisfies_mp": {
                "axa_eq_a": rep.satisfies_mp[0],
                "xax_eq_x": rep.satisfies_mp[1],
                "ax_symmetric": rep.satisfies_mp[2],
                "xa_symmetric": rep.satisfies_mp[3],
            },
            "rank": rep.rank,
            "invertible": rep.invertible,
        });
        print_stdout(&report.to_string())?;
        Ok(rep.is_g_inverse)
    };
    match run() {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CHECK,
        Err(e) => report(&e),
    }
}

/// `oracle`: dense one-inverse of a matrix file, written as a matrix file.
pub fn cmd_oracle(path: &Path, out: Option<&Path>) -> i32 {
    let run = || -> Result<String> {
        let a = MatrixFile::read(path)?.to_matrix()?;
        let x = one_inverse_oracle(&a)?;
        Ok(serde_json::to_string_pretty(&MatrixFile::from_matrix(&x))?)
    };
    match run().and_then(|json| emit(&json, out)) {
        Ok(()) => EXIT_OK,
        Err(e) => report(&e),
    }
}
