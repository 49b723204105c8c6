//! The JSON file formats used by the `tph` binary: problem files, dense
//! matrix files and result files, all with exact rational strings.
//!
//! Run with `cargo run --example problem_files`.

use tph_inverse::assembly::{pinv_tph, PinvOptions};
use tph_inverse::io::{MatrixFile, ProblemFile, ResultFile};
use tph_inverse::problem::{Sign, TphProblem};

fn main() -> tph_inverse::Result<()> {
    let prob = TphProblem::scalar(1, 1, &[2, 1, -1], &[1, 0, 3])?;

    let file = ProblemFile::from_problem(&prob);
    let json = serde_json::to_string_pretty(&file)?;
    println!("problem file:\n{json}\n");

    // round-trip through the text form
    let back = serde_json::from_str::<ProblemFile>(&json)?.to_problem()?;
    assert_eq!(back, prob);

    let dense = MatrixFile::from_matrix(&prob.combined(Sign::Plus));
    println!("dense matrix file (T + H):\n{}\n", serde_json::to_string_pretty(&dense)?);

    let result = pinv_tph(
        &prob,
        Sign::Plus,
        &PinvOptions {
            check: true,
            ..PinvOptions::default()
        },
    )?;
    let report = ResultFile::from_result(&result);
    println!("result file:\n{}", report.to_json()?);
    Ok(())
}
