//! Shared fixtures for the integration suites: the worked 4-by-4 problem,
//! its exact reference artifacts, and the seeded random problem generator.
//!
//! Each integration binary uses its own subset.
#![allow(dead_code)]

use rand::Rng;
use tph_inverse::laurent::LaurentMatrix;
use tph_inverse::matrix::ExactMatrix;
use tph_inverse::problem::TphProblem;
use tph_inverse::rational::{rat, rat_int};

pub fn worked_problem() -> TphProblem {
    TphProblem::scalar(3, 3, &[1, -1, 0, 1, 1, 1, -1], &[1, 0, -1, 1, 0, 0, 1]).unwrap()
}

pub fn worked_t_plus_h() -> ExactMatrix {
    ExactMatrix::from_i64(&[
        &[2, 0, -2, 2],
        &[1, 0, 1, -1],
        &[0, 2, 1, 0],
        &[0, 1, 1, 2],
    ])
}

pub fn worked_t_minus_h() -> ExactMatrix {
    ExactMatrix::from_i64(&[
        &[0, 0, 0, 0],
        &[1, 2, -1, -1],
        &[2, 0, 1, 0],
        &[-2, 1, 1, 0],
    ])
}

pub fn worked_plus_inverse() -> ExactMatrix {
    ExactMatrix::from_i64(&[
        &[5, 10, 0, 0],
        &[2, -4, 12, -4],
        &[-4, 8, -4, 8],
        &[1, -2, -4, 8],
    ])
    .scale(&rat(1, 20))
}

/// Reference one-inverse of the worked `T - H`; the bottom-right entry is the
/// unique value satisfying the one-inverse identity with the reference data.
pub fn worked_minus_ginverse() -> ExactMatrix {
    ExactMatrix::from_i64(&[
        &[-113, 2, 50, -32],
        &[88, 8, 20, 52],
        &[-134, -4, 80, 64],
        &[17, -158, 10, 8],
    ])
    .scale(&rat(1, 180))
}

pub fn worked_indices() -> Vec<i64> {
    vec![-1, 0, 0, 1]
}

pub fn worked_essential_r() -> LaurentMatrix {
    let row1: [[i64; 4]; 6] = [
        [-1, -2, -2, 0],
        [-4, 5, 3, -1],
        [2, 1, 0, 0],
        [-11, -4, -2, 0],
        [0, 4, 1, 0],
        [0, 0, 0, 1],
    ];
    let row2: [[i64; 4]; 6] = [
        [11, -4, -2, 2],
        [-2, -11, -5, 2],
        [4, 0, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 0],
    ];
    let mut r = LaurentMatrix::zero(2, 4);
    for (rows, row_idx) in [(row1, 0), (row2, 1)] {
        for (power, coeffs) in rows.iter().enumerate() {
            for (j, &v) in coeffs.iter().enumerate() {
                if v != 0 {
                    r.set_entry(power as i64, row_idx, j, rat_int(v));
                }
            }
        }
    }
    r
}

/// Reference conforming left essential matrix, powers 0..-5, entries in
/// multiples of 1/180. Only powers 0..-3 reach the band factors.
pub fn worked_essential_l() -> LaurentMatrix {
    let col1: [[i64; 4]; 6] = [
        [-4, -12, 4, 0],
        [4, 0, 12, 0],
        [-1, 6, -23, 0],
        [-21, 6, -35, -180],
        [-18, -84, 76, 0],
        [16, 0, 0, 0],
    ];
    let col2: [[i64; 4]; 6] = [
        [25, 30, -25, 180],
        [26, 108, -126, 0],
        [-11, 30, -43, 0],
        [-6, -24, 32, 0],
        [10, 24, -26, 0],
        [4, 0, 0, 0],
    ];
    let mut l = LaurentMatrix::zero(4, 2);
    let scale = rat(1, 180);
    for (cols, col_idx) in [(col1, 0), (col2, 1)] {
        for (depth, entries) in cols.iter().enumerate() {
            for (i, &v) in entries.iter().enumerate() {
                if v != 0 {
                    l.set_entry(-(depth as i64), i, col_idx, rat_int(v) * &scale);
                }
            }
        }
    }
    l
}

pub fn g_inverse_holds(a: &ExactMatrix, x: &ExactMatrix) -> bool {
    match a.matmul(x).and_then(|ax| ax.matmul(a)) {
        Ok(axa) => axa == *a,
        Err(_) => false,
    }
}

fn random_blocks<R: Rng>(rng: &mut R, count: usize, p: usize, q: usize) -> Vec<ExactMatrix> {
    (0..count)
        .map(|_| {
            ExactMatrix::from_fn(p, q, |_, _| {
                if rng.gen_bool(0.75) {
                    rat_int(rng.gen_range(-3..=3))
                } else {
                    rat(rng.gen_range(-3..=3), rng.gen_range(1..=4))
                }
            })
        })
        .collect()
}

/// Random problem with p, q in {1,2}, n, m in {1..4}, entries uniform small
/// integers mixed with small rationals. Never returns the all-zero problem.
pub fn random_problem<R: Rng>(rng: &mut R) -> TphProblem {
    loop {
        let p = rng.gen_range(1..=2);
        let q = rng.gen_range(1..=2);
        let n = rng.gen_range(1..=4usize);
        let m = rng.gen_range(1..=4usize);
        let count = n + m + 1;
        let a = random_blocks(rng, count, p, q);
        let b = random_blocks(rng, count, p, q);
        let prob = TphProblem::new(p, q, n, m, a, b).unwrap();
        if !prob.is_zero() {
            return prob;
        }
    }
}
