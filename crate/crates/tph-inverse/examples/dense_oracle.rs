//! The independent dense oracle: one-inverses of arbitrary rational matrices
//! by full-rank factorization, and the four Penrose condition checks.
//!
//! Run with `cargo run --example dense_oracle`.

use tph_inverse::matrix::ExactMatrix;
use tph_inverse::oracle::{is_g_inverse, one_inverse_oracle};

fn show(name: &str, a: &ExactMatrix) -> tph_inverse::Result<()> {
    let x = one_inverse_oracle(a)?;
    let report = is_g_inverse(a, &x)?;
    println!("{name} =\n{a}");
    println!("one-inverse =\n{x}");
    println!(
        "rank {}, invertible {}, Penrose conditions {:?}\n",
        report.rank, report.invertible, report.satisfies_mp
    );
    Ok(())
}

fn main() -> tph_inverse::Result<()> {
    show("square invertible", &ExactMatrix::from_i64(&[&[2, 1], &[1, 1]]))?;
    show(
        "rank-deficient square",
        &ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]),
    )?;
    show(
        "wide rectangular",
        &ExactMatrix::from_i64(&[&[1, 0, 2], &[0, 1, -1]]),
    )?;
    show("tall rectangular", &ExactMatrix::from_i64(&[&[1], &[1]]))?;
    show("zero", &ExactMatrix::zeros(2, 3))?;
    Ok(())
}
