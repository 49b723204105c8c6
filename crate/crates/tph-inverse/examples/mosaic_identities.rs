//! The structural identities behind the plus/minus formulas: the permutation
//! unshuffle of the stacked block Toeplitz matrix into the mosaic, the
//! two-sided reduction onto `diag(T+H, T-H)`, and the recovery of both
//! inverses from the mosaic route.
//!
//! Run with `cargo run --example mosaic_identities`.

use tph_inverse::assembly::{pinv_block_toeplitz, pinv_tph, run_pipeline, PinvOptions};
use tph_inverse::mosaic::{
    build_mosaic, merchant_factor_check, permutation_p1, permutation_p2, reduction_left_factor,
    reduction_right_factor,
};
use tph_inverse::problem::{Sign, TphProblem};
use tph_inverse::rational::rat;
use tph_inverse::sequence::toeplitz_tk;

fn main() -> tph_inverse::Result<()> {
    let prob = TphProblem::scalar(3, 3, &[1, -1, 0, 1, 1, 1, -1], &[1, 0, -1, 1, 0, 0, 1])?;
    let pl = run_pipeline(&prob)?;

    let t0 = toeplitz_tk(&pl.seq, 0)?;
    println!("stacked block Toeplitz matrix ({}x{}):\n{t0}", t0.rows(), t0.cols());

    let mosaic = build_mosaic(&prob);
    println!("\nmosaic rearrangement:\n{mosaic}");

    let p1 = permutation_p1(&prob);
    let p2 = permutation_p2(&prob);
    println!(
        "\nP1 * T_A * P2 equals the mosaic: {}",
        p1.matmul(&t0)?.matmul(&p2)? == mosaic
    );
    println!(
        "two-sided reduction onto diag(T+H, T-H) holds: {}",
        merchant_factor_check(&prob)
    );

    // generalized inverse of the stacked matrix, carried over to the mosaic
    let t0_pinv = pinv_block_toeplitz(&pl.seq, &pl.ess, &pl.conf, &pl.table)?;
    let mosaic_pinv = p2.transpose().matmul(&t0_pinv)?.matmul(&p1.transpose())?;
    let check = mosaic.matmul(&mosaic_pinv)?.matmul(&mosaic)? == mosaic;
    println!("mosaic one-inverse identity holds: {check}");

    // the diagonal blocks of G are the plus and minus inverses
    let g = reduction_right_factor(&prob)
        .matmul(&mosaic_pinv)?
        .matmul(&reduction_left_factor(&prob))?
        .scale(&rat(1, 2));
    let rows = (prob.m() + 1) * prob.q();
    let cols = (prob.n() + 1) * prob.p();
    let plus = pinv_tph(&prob, Sign::Plus, &PinvOptions::default())?;
    let minus = pinv_tph(&prob, Sign::Minus, &PinvOptions::default())?;
    println!(
        "G11 equals the plus inverse:  {}",
        g.submatrix(0..rows, 0..cols) == plus.pinv
    );
    println!(
        "G22 equals the minus inverse: {}",
        g.submatrix(rows..2 * rows, cols..2 * cols) == minus.pinv
    );
    Ok(())
}
