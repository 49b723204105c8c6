//! Shared fixtures for unit tests: the worked 4-by-4 scalar problem with
//! `n = m = 3` and the exact reference artifacts computed for it.

use crate::laurent::LaurentMatrix;
use crate::matrix::ExactMatrix;
use crate::problem::TphProblem;
use crate::rational::{rat, rat_int, Rational};

/// Scalar problem with a = (1, -1, 0, 1, 1, 1, -1) for j = -3..3 and
/// b = (1, 0, -1, 1, 0, 0, 1) for j = 0..6.
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

/// The unique inverse of the worked `T + H`, scaled by 1/20.
pub fn worked_plus_inverse() -> ExactMatrix {
    scaled(
        &[
            &[5, 10, 0, 0],
            &[2, -4, 12, -4],
            &[-4, 8, -4, 8],
            &[1, -2, -4, 8],
        ],
        20,
    )
}

/// The reference one-inverse of the worked `T - H`, scaled by 1/180. The
/// bottom-right entry is 8, the unique value for which the one-inverse
/// identity holds with the reference essential data.
pub fn worked_minus_ginverse() -> ExactMatrix {
    scaled(
        &[
            &[-113, 2, 50, -32],
            &[88, 8, 20, 52],
            &[-134, -4, 80, 64],
            &[17, -158, 10, 8],
        ],
        180,
    )
}

fn scaled(rows: &[&[i64]], den: i64) -> ExactMatrix {
    ExactMatrix::from_i64(rows).scale(&rat(1, den))
}

/// Column indices of the reference right essential matrix.
pub fn worked_indices() -> Vec<i64> {
    vec![-1, 0, 0, 1]
}

/// The reference right essential matrix: 2-by-4, powers 0..5.
pub fn worked_essential_r() -> LaurentMatrix {
    // row 1 coefficients by ascending power, then row 2
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
    for (power, coeffs) in row1.iter().enumerate() {
        for (j, &v) in coeffs.iter().enumerate() {
            if v != 0 {
                r.set_entry(power as i64, 0, j, rat_int(v));
            }
        }
    }
    for (power, coeffs) in row2.iter().enumerate() {
        for (j, &v) in coeffs.iter().enumerate() {
            if v != 0 {
                r.set_entry(power as i64, 1, j, rat_int(v));
            }
        }
    }
    r
}

/// The reference conforming left essential matrix: 4-by-2, powers 0..-5,
/// every entry an integer multiple of 1/180. This is the unique inverse
/// block of the stacked matrix built from [`worked_essential_r`]; only the
/// coefficients at powers 0..-3 ever reach the band factors.
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
    let mut put = |depth: usize, i: usize, j: usize, v: i64| {
        if v != 0 {
            l.set_entry(-(depth as i64), i, j, rat_int(v) * &scale);
        }
    };
    for (depth, col) in col1.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            put(depth, i, 0, v);
        }
    }
    for (depth, col) in col2.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            put(depth, i, 1, v);
        }
    }
    l
}

/// Evaluates `A X A = A` exactly.
pub fn g_inverse_holds(a: &ExactMatrix, x: &ExactMatrix) -> bool {
    match a.matmul(x).and_then(|ax| ax.matmul(a)) {
        Ok(axa) => axa == *a,
        Err(_) => false,
    }
}

pub fn half() -> Rational {
    rat(1, 2)
}
