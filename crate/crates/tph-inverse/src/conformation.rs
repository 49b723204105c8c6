//! Conformation: recovering the left essential matrix from the right one.
//!
//! Essentiality forces the middle band of `A(z) R(z)` to vanish, so the
//! product splits by pure coefficient bookkeeping into
//! `A(z) R(z) = alpha_-(z) d(z) - z^{n+1} beta_+(z)` with `d(z)` the diagonal
//! of index powers. Stacking `z^{-m-1} R(z) d^{-1}(z)` over `alpha_-(z)` gives
//! a square matrix polynomial in `z^-1` whose determinant is a nonzero
//! constant; the last `2p` columns of its exact inverse are the conforming
//! left essential polynomials.

use num::Zero;

use crate::error::{Error, Result};
use crate::essential::EssentialSet;
use crate::laurent::{polymat_det, polymat_inverse_unimodular, unimodular_constant, LaurentMatrix};
use crate::rational::Rational;
use crate::sequence::ASequence;

/// Everything produced by one conformation run, kept for audit: the split,
/// the stacked matrix, its constant determinant, its full inverse and the
/// extracted left essential matrix.
#[derive(Clone, Debug)]
pub struct ConformationData {
    /// `diag(z^{mu_1}, ..., z^{mu_s})`.
    pub dz: LaurentMatrix,
    /// `2p`-by-`s`, powers `<= 0`.
    pub alpha_minus: LaurentMatrix,
    /// `2p`-by-`s`, powers `>= 0`.
    pub beta_plus: LaurentMatrix,
    /// The stacked `s`-by-`s` matrix polynomial in `z^-1`.
    pub u_minus: LaurentMatrix,
    /// Exact inverse of `u_minus`.
    pub u_minus_inverse: LaurentMatrix,
    /// The constant determinant of `u_minus`.
    pub det_const: Rational,
    /// Conforming left essential matrix: `s`-by-`2p`, powers `<= 0`. All
    /// computed coefficients are preserved even below `z^{-n}`; the assembly
    /// stage truncates on its own.
    pub l: LaurentMatrix,
}

/// Splits `A(z) R(z)` into the low part (powers at most the column index,
/// shifted to nonpositive powers) and the high part (powers at least `n+1`,
/// negated and shifted to nonnegative powers).
///
/// A nonzero coefficient strictly between the two bands means the claimed
/// column is not essential.
pub fn split_decomposition(
    seq: &ASequence,
    ess: &EssentialSet,
) -> Result<(LaurentMatrix, LaurentMatrix)> {
    let prod = seq.generator().lmul(&ess.r)?;
    let rows = prod.rows();
    let cols = prod.cols();
    let n = seq.n() as i64;

    let mut alpha_minus = LaurentMatrix::zero(rows, cols);
    let mut beta_plus = LaurentMatrix::zero(rows, cols);
    for (power, coeff) in prod.iter() {
        for j in 0..cols {
            let mu = ess.column_index[j];
            let column_is_zero = (0..rows).all(|i| coeff.get(i, j).is_zero());
            if column_is_zero {
                continue;
            }
            if power <= mu {
                for i in 0..rows {
                    if !coeff.get(i, j).is_zero() {
                        alpha_minus.set_entry(power - mu, i, j, coeff.get(i, j).clone());
                    }
                }
            } else if power > n {
                for i in 0..rows {
                    if !coeff.get(i, j).is_zero() {
                        beta_plus.set_entry(power - (n + 1), i, j, -coeff.get(i, j).clone());
                    }
                }
            } else {
                return Err(Error::EssentialityViolation { col: j, power });
            }
        }
    }
    Ok((alpha_minus, beta_plus))
}

/// Stacks `z^{-m-1} R(z) d^{-1}(z)` over `alpha_-(z)`; every power of the
/// result is nonpositive.
pub fn build_u_minus(ess: &EssentialSet, alpha_minus: &LaurentMatrix) -> LaurentMatrix {
    let shifts: Vec<i64> = ess
        .column_index
        .iter()
        .map(|&mu| -(ess.m() as i64) - 1 - mu)
        .collect();
    let r_minus = ess.r.shift_columns(&shifts);
    let u = r_minus.vstack(alpha_minus).expect("column counts agree");
    debug_assert!(u.hi().is_none_or(|hi| hi <= 0));
    u
}

/// Runs the split, builds the stacked matrix, checks unimodularity, inverts it
/// exactly and extracts the conforming left essential matrix.
pub fn conform_left(seq: &ASequence, ess: &EssentialSet) -> Result<ConformationData> {
    let (alpha_minus, beta_plus) = split_decomposition(seq, ess)?;
    let u_minus = build_u_minus(ess, &alpha_minus);

    let det = polymat_det(&u_minus)?;
    let det_const = unimodular_constant(&det)?;
    let u_minus_inverse = polymat_inverse_unimodular(&u_minus)?;

    let s = u_minus.rows();
    let l = u_minus_inverse.sub_cols(2 * seq.q()..s);
    let dz = LaurentMatrix::diag_powers(&ess.column_index);

    Ok(ConformationData {
        dz,
        alpha_minus,
        beta_plus,
        u_minus,
        u_minus_inverse,
        det_const,
        l,
    })
}
