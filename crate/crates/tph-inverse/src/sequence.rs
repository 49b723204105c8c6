//! The generating sequence of a Toeplitz-plus-Hankel problem and the block
//! Toeplitz family built on it.
//!
//! The `2p`-by-`2q` blocks interleave the Hankel and Toeplitz coefficients as
//!
//! ```text
//! A_j = [ b_{n-j}    a_{n-m-j} ]
//!       [ a_j        b_{j+m}   ]        j = -m..n
//! ```
//!
//! so one Laurent function carries both summands. Every later stage (index
//! table, essential polynomials, inverse formulas) consumes this sequence
//! only.

use crate::error::{Error, Result};
use crate::laurent::LaurentMatrix;
use crate::matrix::ExactMatrix;
use crate::problem::TphProblem;

/// Generating blocks `A_{-m}..A_n` and their Laurent function.
#[derive(Clone, Debug)]
pub struct ASequence {
    p: usize,
    q: usize,
    n: usize,
    m: usize,
    blocks: Vec<ExactMatrix>,
    generator: LaurentMatrix,
}

impl ASequence {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Total number of essential polynomials of a full set: `2(p+q)`.
    pub fn full_set_size(&self) -> usize {
        2 * (self.p + self.q)
    }

    /// Block `A_j`, `j` in `[-m, n]`.
    pub fn block(&self, j: i64) -> &ExactMatrix {
        let idx = j + self.m as i64;
        assert!(
            (0..self.blocks.len() as i64).contains(&idx),
            "sequence index {j} out of range"
        );
        &self.blocks[idx as usize]
    }

    pub fn generator(&self) -> &LaurentMatrix {
        &self.generator
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(ExactMatrix::is_zero)
    }
}

/// Assembles the generating sequence of a problem.
pub fn build_generating_sequence(prob: &TphProblem) -> ASequence {
    let (p, q, n, m) = (prob.p(), prob.q(), prob.n(), prob.m());
    let mut blocks = Vec::with_capacity(n + m + 1);
    let mut generator = LaurentMatrix::zero(2 * p, 2 * q);
    for j in -(m as i64)..=(n as i64) {
        let mut blk = ExactMatrix::zeros(2 * p, 2 * q);
        blk.set_block(0, 0, prob.b(n as i64 - j));
        blk.set_block(0, q, prob.a(n as i64 - m as i64 - j));
        blk.set_block(p, 0, prob.a(j));
        blk.set_block(p, q, prob.b(j + m as i64));
        generator.set_coeff(j, blk.clone()).expect("same shape");
        blocks.push(blk);
    }
    ASequence {
        p,
        q,
        n,
        m,
        blocks,
        generator,
    }
}

/// The moment functional of the sequence: `sum_j A_{-j} r_j`, i.e. the
/// coefficient of `z^0` in `A(z) R(z)`.
///
/// `R` must have `2q` rows and powers within `[-n, m]`.
pub fn sigma_r(seq: &ASequence, r: &LaurentMatrix) -> Result<ExactMatrix> {
    if r.rows() != 2 * seq.q {
        return Err(Error::ShapeMismatch(format!(
            "sigma_r: operand has {} rows, expected {}",
            r.rows(),
            2 * seq.q
        )));
    }
    let (lo, hi) = (-(seq.n as i64), seq.m as i64);
    if let (Some(have_lo), Some(have_hi)) = (r.lo(), r.hi()) {
        if have_lo < lo || have_hi > hi {
            return Err(Error::PowerRange {
                have_lo,
                have_hi,
                lo,
                hi,
            });
        }
    }
    Ok(seq.generator.lmul(r)?.coeff(0))
}

/// Member `T_k` of the block Toeplitz family, `k` in `[-m, n]`:
/// block rows `A_k..A_n` down the first column, `A_k..A_{-m}` along the first
/// row, shape `2p(n-k+1)`-by-`2q(k+m+1)`.
pub fn toeplitz_tk(seq: &ASequence, k: i64) -> Result<ExactMatrix> {
    let (lo, hi) = (-(seq.m as i64), seq.n as i64);
    if k < lo || k > hi {
        return Err(Error::FamilyIndexOutOfRange { k, lo, hi });
    }
    let block_rows = (seq.n as i64 - k + 1) as usize;
    let block_cols = (k + seq.m as i64 + 1) as usize;
    let (bp, bq) = (2 * seq.p, 2 * seq.q);
    let mut t = ExactMatrix::zeros(block_rows * bp, block_cols * bq);
    for r in 0..block_rows {
        for c in 0..block_cols {
            t.set_block(r * bp, c * bq, seq.block(k + r as i64 - c as i64));
        }
    }
    Ok(t)
}
