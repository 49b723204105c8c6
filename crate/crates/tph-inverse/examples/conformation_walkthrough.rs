//! Step-by-step conformation: from the right essential polynomials to the
//! conforming left ones through the exact inverse of a unimodular matrix
//! polynomial.
//!
//! Run with `cargo run --example conformation_walkthrough`.

use tph_inverse::assembly::run_pipeline;
use tph_inverse::conformation::split_decomposition;
use tph_inverse::laurent::polymat_det;
use tph_inverse::problem::TphProblem;

fn print_laurent(name: &str, l: &tph_inverse::laurent::LaurentMatrix) {
    println!("{name} ({}x{}):", l.rows(), l.cols());
    for (power, coeff) in l.iter() {
        println!("  coefficient of z^{power}:\n{coeff}");
    }
}

fn main() -> tph_inverse::Result<()> {
    let prob = TphProblem::scalar(3, 3, &[1, -1, 0, 1, 1, 1, -1], &[1, 0, -1, 1, 0, 0, 1])?;
    let pl = run_pipeline(&prob)?;

    println!("column indices: {:?}\n", pl.ess.column_index);
    print_laurent("right essential matrix R(z)", &pl.ess.r);

    let (alpha_minus, beta_plus) = split_decomposition(&pl.seq, &pl.ess)?;
    print_laurent("\nlow split alpha_-(z)", &alpha_minus);
    print_laurent("\nhigh split beta_+(z)", &beta_plus);

    // the reconstruction A(z)R(z) = alpha_-(z) d(z) - z^{n+1} beta_+(z)
    let lhs = pl.seq.generator().lmul(&pl.ess.r)?;
    let rhs = alpha_minus
        .lmul(&pl.conf.dz)?
        .sub(&beta_plus.shift(prob.n() as i64 + 1))?;
    println!("\nsplit reconstruction holds: {}", lhs == rhs);

    print_laurent("\nstacked matrix U_-(z)", &pl.conf.u_minus);
    let det = polymat_det(&pl.conf.u_minus)?;
    println!("\ndet U_- = {}", det.coeff(0).get(0, 0));
    println!("recorded constant: {}", pl.conf.det_const);

    print_laurent("\nconforming left essential matrix L(z)", &pl.conf.l);
    println!(
        "\nU_- * U_-^(-1) is the identity: {}",
        pl.conf.u_minus.lmul(&pl.conf.u_minus_inverse)?
            == tph_inverse::laurent::LaurentMatrix::identity(4)
    );
    Ok(())
}
