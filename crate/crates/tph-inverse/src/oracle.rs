//! Independent dense oracle: a one-inverse via exact full-rank factorization
//! and a checker for the generalized-inverse identities.
//!
//! The oracle never touches the structured pipeline. It factors `A = F G`
//! straight from the RREF (`F` the pivot columns of `A`, `G` the pivot rows of
//! the reduced form) and returns `G' (G G')^-1 (F' F)^-1 F'` with the bilinear
//! transpose, which satisfies all four Penrose identities over the rationals.

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// Outcome of checking a candidate generalized inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    /// `A X A = A`.
    pub is_g_inverse: bool,
    /// The four Penrose conditions: `AXA=A`, `XAX=X`, `(AX)' = AX`, `(XA)' = XA`.
    pub satisfies_mp: [bool; 4],
    /// Rank of `A`.
    pub rank: usize,
    /// `A` is square of full rank.
    pub invertible: bool,
}

/// One-inverse of an arbitrary rational matrix by full-rank factorization.
///
/// The zero matrix maps to the zero matrix of transposed shape. `G G'` and
/// `F' F` are invertible whenever the factorization has full rank, so a
/// failure there signals a broken RREF and surfaces as an internal error.
pub fn one_inverse_oracle(a: &ExactMatrix) -> Result<ExactMatrix> {
    let rref = a.rref();
    let rank = rref.rank;
    if rank == 0 {
        return Ok(ExactMatrix::zeros(a.cols(), a.rows()));
    }
    let f = {
        let cols: Vec<Vec<_>> = rref.pivot_cols.iter().map(|&c| a.column(c)).collect();
        ExactMatrix::from_columns(a.rows(), &cols)
    };
    let g = rref.matrix.submatrix(0..rank, 0..a.cols());

    let internal = |_| Error::Internal("full-rank factor Gram matrix is singular".into());
    let ggt_inv = g.matmul(&g.transpose())?.inverse().map_err(internal)?;
    let ftf_inv = f.transpose().matmul(&f)?.inverse().map_err(internal)?;
    g.transpose()
        .matmul(&ggt_inv)?
        .matmul(&ftf_inv)?
        .matmul(&f.transpose())
}

/// Exact evaluation of the four Penrose conditions for a candidate `X`.
pub fn is_g_inverse(a: &ExactMatrix, x: &ExactMatrix) -> Result<OracleReport> {
    if x.rows() != a.cols() || x.cols() != a.rows() {
        return Err(Error::ShapeMismatch(format!(
            "candidate is {}x{}, expected {}x{}",
            x.rows(),
            x.cols(),
            a.cols(),
            a.rows()
        )));
    }
    let ax = a.matmul(x)?;
    let xa = x.matmul(a)?;
    let axa = ax.matmul(a)?;
    let xax = xa.matmul(x)?;
    let satisfies_mp = [
        axa == *a,
        xax == *x,
        ax.transpose() == ax,
        xa.transpose() == xa,
    ];
    let rank = a.rank();
    Ok(OracleReport {
        is_g_inverse: satisfies_mp[0],
        satisfies_mp,
        rank,
        invertible: a.is_square() && rank == a.rows(),
    })
}
