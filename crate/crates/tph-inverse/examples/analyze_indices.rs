//! Index analysis of a Toeplitz-plus-Hankel problem: the kernel-dimension
//! staircase of the block Toeplitz family, its defects and its indices.
//!
//! Run with `cargo run --example analyze_indices`.

use tph_inverse::indices::compute_index_table;
use tph_inverse::problem::TphProblem;
use tph_inverse::sequence::{build_generating_sequence, toeplitz_tk};

fn main() -> tph_inverse::Result<()> {
    // 4x4 scalar problem with n = m = 3
    let prob = TphProblem::scalar(3, 3, &[1, -1, 0, 1, 1, 1, -1], &[1, 0, -1, 1, 0, 0, 1])?;
    println!("T + H =\n{}", prob.combined(tph_inverse::Sign::Plus));
    println!("T - H =\n{}", prob.combined(tph_inverse::Sign::Minus));

    let seq = build_generating_sequence(&prob);
    println!("\ngenerating blocks A_j (j = -3..3):");
    for j in -3..=3 {
        println!("A_{j} =\n{}", seq.block(j));
    }

    let table = compute_index_table(&seq)?;
    let m = prob.m() as i64;
    let n = prob.n() as i64;
    println!("\nkernel dimensions d_k and differences delta_k:");
    for k in -m - 1..=n + 1 {
        let d = table.d_at(k);
        if k >= -m {
            println!("  k = {k:>2}: d = {d:>2}, delta = {}", table.delta_at(k));
        } else {
            println!("  k = {k:>2}: d = {d:>2}");
        }
    }
    println!("\nleft defect  alpha = {}", table.alpha);
    println!("right defect omega = {}", table.omega);
    println!("indices mu = {:?}", table.mu);
    print!("distinct indices:");
    for di in &table.distinct {
        print!(" ({}, multiplicity {})", di.lambda, di.nu);
    }
    println!();

    // the staircase is backed by the ranks of the Toeplitz family members
    println!("\nfamily member shapes and ranks:");
    for k in -m..=n {
        let t_k = toeplitz_tk(&seq, k)?;
        println!(
            "  T_{k:>2}: {:>2} x {:>2}, rank {}",
            t_k.rows(),
            t_k.cols(),
            t_k.rank()
        );
    }
    Ok(())
}
