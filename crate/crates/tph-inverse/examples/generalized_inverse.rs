//! Full inversion of both `T + H` and `T - H` in exact rational arithmetic,
//! with the generalized-inverse identity checked on the spot.
//!
//! Run with `cargo run --example generalized_inverse`.

use tph_inverse::assembly::{pinv_tph, PinvOptions};
use tph_inverse::oracle::is_g_inverse;
use tph_inverse::problem::{Sign, TphProblem};

fn main() -> tph_inverse::Result<()> {
    let prob = TphProblem::scalar(3, 3, &[1, -1, 0, 1, 1, 1, -1], &[1, 0, -1, 1, 0, 0, 1])?;
    let options = PinvOptions {
        check: true,
        ..PinvOptions::default()
    };

    for sign in [Sign::Plus, Sign::Minus] {
        let dense = prob.combined(sign);
        let result = pinv_tph(&prob, sign, &options)?;
        println!("T {sign} H =\n{dense}");
        println!("generalized inverse =\n{}", result.pinv);
        println!("invertible: {}", result.diagnostics.invertible);
        if let Some(det) = &result.diagnostics.det_const {
            println!("conformation determinant: {det}");
        }
        for (name, ok) in &result.diagnostics.checks {
            println!("check {name}: {}", if *ok { "pass" } else { "FAIL" });
        }

        let report = is_g_inverse(&dense, &result.pinv)?;
        println!(
            "oracle: AXA=A {}, rank {}, invertible {}\n",
            report.is_g_inverse, report.rank, report.invertible
        );
    }

    // a rectangular problem: 1x2 blocks, 2x2 block grid
    let blk = |v: [i64; 2]| tph_inverse::ExactMatrix::from_i64(&[&v]);
    let rect = TphProblem::new(
        1,
        2,
        1,
        1,
        vec![blk([1, 0]), blk([2, -1]), blk([0, 3])],
        vec![blk([1, 1]), blk([0, 2]), blk([-1, 0])],
    )?;
    let result = pinv_tph(&rect, Sign::Plus, &options)?;
    println!(
        "rectangular T + H ({}x{}) one-inverse ({}x{}):\n{}",
        rect.combined(Sign::Plus).rows(),
        rect.combined(Sign::Plus).cols(),
        result.pinv.rows(),
        result.pinv.cols(),
        result.pinv
    );
    Ok(())
}
