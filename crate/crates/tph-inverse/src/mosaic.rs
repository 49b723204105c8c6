//! Mosaic rearrangement of the block Toeplitz matrix and the two-sided
//! reduction to the plus/minus pair.
//!
//! Unshuffling the `2p`-tall block rows and `2q`-wide block columns of the
//! stacked Toeplitz matrix by explicit permutations produces a 2-by-2 mosaic
//! of Toeplitz and Hankel quadrants. Sandwiching `diag(T+H, T-H)` between
//! fixed exchange-block matrices reproduces that mosaic exactly, which is the
//! bridge between the block Toeplitz inverse formula and the plus/minus
//! inverse formulas.

use num::One;

use crate::matrix::ExactMatrix;
use crate::problem::{Sign, TphProblem};
use crate::rational::{rat, Rational};

/// Exchange matrix: identity sub-blocks on the block anti-diagonal. Reverses
/// the order of `blocks` blocks of size `block_size`.
pub fn exchange_matrix(blocks: usize, block_size: usize) -> ExactMatrix {
    let dim = blocks * block_size;
    let mut j = ExactMatrix::zeros(dim, dim);
    for b in 0..blocks {
        for r in 0..block_size {
            j.set(b * block_size + r, (blocks - 1 - b) * block_size + r, Rational::one());
        }
    }
    j
}

/// The mosaic matrix: same shape as the stacked Toeplitz matrix, with the
/// Hankel data gathered in the top-left and bottom-right quadrants and the
/// Toeplitz data in the other two.
pub fn build_mosaic(prob: &TphProblem) -> ExactMatrix {
    let (p, q, n, m) = (prob.p(), prob.q(), prob.n(), prob.m());
    let (ni, mi) = (n as i64, m as i64);
    let mut out = ExactMatrix::zeros(2 * p * (n + 1), 2 * q * (m + 1));
    for i in 0..=n {
        for j in 0..=m {
            let (ii, jj) = (i as i64, j as i64);
            // top-left: reversed-row Hankel
            out.set_block(i * p, j * q, prob.b(ni - ii + jj));
            // top-right: fully reversed Toeplitz
            out.set_block(i * p, (m + 1 + j) * q, prob.a(ni - mi - ii + jj));
            // bottom-left: the Toeplitz summand itself
            out.set_block((n + 1 + i) * p, j * q, prob.a(ii - jj));
            // bottom-right: reversed-column Hankel
            out.set_block((n + 1 + i) * p, (m + 1 + j) * q, prob.b(ii + mi - jj));
        }
    }
    out
}

/// Row unshuffle: gathers the first `p`-sub-rows of every `2p`-tall block row,
/// then the second ones. Multiplying the stacked Toeplitz matrix on the left
/// by this permutation produces the mosaic row order.
pub fn permutation_p1(prob: &TphProblem) -> ExactMatrix {
    let (p, n) = (prob.p(), prob.n());
    let dim = 2 * p * (n + 1);
    let mut perm = ExactMatrix::zeros(dim, dim);
    for new in 0..dim {
        let (block, offset, second) = if new < p * (n + 1) {
            (new / p, new % p, 0)
        } else {
            let t = new - p * (n + 1);
            (t / p, t % p, p)
        };
        let old = 2 * p * block + second + offset;
        perm.set(new, old, Rational::one());
    }
    perm
}

/// Column unshuffle: the analogous regrouping of the `2q`-wide block columns,
/// applied by right multiplication.
pub fn permutation_p2(prob: &TphProblem) -> ExactMatrix {
    let (q, m) = (prob.q(), prob.m());
    let dim = 2 * q * (m + 1);
    let mut perm = ExactMatrix::zeros(dim, dim);
    for new in 0..dim {
        let (block, offset, second) = if new < q * (m + 1) {
            (new / q, new % q, 0)
        } else {
            let t = new - q * (m + 1);
            (t / q, t % q, q)
        };
        let old = 2 * q * block + second + offset;
        perm.set(old, new, Rational::one());
    }
    perm
}

/// Left factor of the two-sided reduction, `2p(n+1)` square:
/// `[[J, J], [I, -I]]` with `J` the exchange of `(n+1)` blocks of `p`.
pub fn reduction_left_factor(prob: &TphProblem) -> ExactMatrix {
    let (p, n) = (prob.p(), prob.n());
    let half = p * (n + 1);
    let j = exchange_matrix(n + 1, p);
    let id = ExactMatrix::identity(half);
    let mut out = ExactMatrix::zeros(2 * half, 2 * half);
    out.set_block(0, 0, &j);
    out.set_block(0, half, &j);
    out.set_block(half, 0, &id);
    out.set_block(half, half, &id.neg());
    out
}

/// Right factor of the two-sided reduction, `2q(m+1)` square:
/// `[[I, J], [-I, J]]` with `J` the exchange of `(m+1)` blocks of `q`.
pub fn reduction_right_factor(prob: &TphProblem) -> ExactMatrix {
    let (q, m) = (prob.q(), prob.m());
    let half = q * (m + 1);
    let j = exchange_matrix(m + 1, q);
    let id = ExactMatrix::identity(half);
    let mut out = ExactMatrix::zeros(2 * half, 2 * half);
    out.set_block(0, 0, &id);
    out.set_block(0, half, &j);
    out.set_block(half, 0, &id.neg());
    out.set_block(half, half, &j);
    out
}

/// Evaluates both sides of the two-sided reduction
/// `mosaic = 1/2 * [[J,J],[I,-I]] * diag(T+H, T-H) * [[I,J],[-I,J]]`
/// exactly and reports whether they agree.
pub fn merchant_factor_check(prob: &TphProblem) -> bool {
    let mosaic = build_mosaic(prob);
    let plus = prob.combined(Sign::Plus);
    let minus = prob.combined(Sign::Minus);
    let half_p = prob.p() * (prob.n() + 1);
    let half_q = prob.q() * (prob.m() + 1);
    let mut diag = ExactMatrix::zeros(2 * half_p, 2 * half_q);
    diag.set_block(0, 0, &plus);
    diag.set_block(half_p, half_q, &minus);

    let lhs = reduction_left_factor(prob)
        .matmul(&diag)
        .and_then(|x| x.matmul(&reduction_right_factor(prob)))
        .map(|x| x.scale(&rat(1, 2)));
    match lhs {
        Ok(lhs) => lhs == mosaic,
        Err(_) => false,
    }
}
