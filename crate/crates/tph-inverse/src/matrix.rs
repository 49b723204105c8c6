//! Dense matrices over the rationals and the exact elimination kernels
//! (reduced row echelon form, canonical kernel bases, determinant, inverse)
//! that the rest of the crate is built on.

use std::fmt;
use std::ops::Range;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat_int, Rational};

/// Dense row-major matrix of exact rationals.
///
/// Zero rows or columns are permitted: degenerate block counts produce
/// genuinely empty matrices, and every operation treats them consistently.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Output of [`ExactMatrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    /// The unique reduced row echelon form.
    pub matrix: ExactMatrix,
    /// Pivot column positions, strictly increasing.
    pub pivot_cols: Vec<usize>,
    /// Number of pivots.
    pub rank: usize,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::ShapeMismatch(format!(
                    "ragged rows: expected {ncols} entries, found {}",
                    r.len()
                )));
            }
        }
        Ok(ExactMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer-literal constructor; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&v| rat_int(v)).collect())
            .collect();
        Self::from_rows(converted).expect("ragged integer literal matrix")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn transpose(&self) -> ExactMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> ExactMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| -self.get(i, j).clone())
    }

    pub fn scale(&self, s: &Rational) -> ExactMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * s)
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.same_shape(other, "add")?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.same_shape(other, "sub")?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - other.get(i, j)
        }))
    }

    pub fn matmul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "matmul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + aik * b;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "hstack: {} rows vs {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "vstack: {} cols vs {} cols",
                self.cols, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        }))
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> ExactMatrix {
        assert!(rows.end <= self.rows && cols.end <= self.cols);
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows.start + i, cols.start + j).clone()
        })
    }

    /// Writes `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &ExactMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, c).clone()).collect()
    }

    /// Builds a matrix whose columns are the given equal-length vectors.
    pub fn from_columns(dim: usize, cols: &[Vec<Rational>]) -> ExactMatrix {
        Self::from_fn(dim, cols.len(), |i, j| cols[j][i].clone())
    }

    fn same_shape(&self, other: &ExactMatrix, op: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Unique reduced row echelon form over the rationals, together with the
    /// pivot columns and the rank.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        Rref {
            rank: pivot_cols.len(),
            matrix: m,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical RREF-derived basis of `{x : Mx = 0}`.
    ///
    /// One column per free column of the RREF, carrying 1 in its own free
    /// coordinate, 0 in every other free coordinate, and back-substituted
    /// values in the pivot coordinates; columns ordered by ascending free
    /// column index. Fully deterministic.
    pub fn right_kernel_basis(&self) -> ExactMatrix {
        let rref = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &rref.pivot_cols {
                v[p] = true;
            }
            v
        };
        let free_cols: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut basis = ExactMatrix::zeros(self.cols, free_cols.len());
        for (idx, &f) in free_cols.iter().enumerate() {
            basis.set(f, idx, Rational::one());
            for (r, &p) in rref.pivot_cols.iter().enumerate() {
                basis.set(p, idx, -rref.matrix.get(r, f).clone());
            }
        }
        basis
    }

    /// Exact determinant of a square matrix.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "det: {}x{} is not square",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Rational::zero());
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) / &pivot;
                for j in c..n {
                    let v = m.get(i, j) - &f * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse of a square matrix; `Error::Singular` if none exists.
    pub fn inverse(&self) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "inverse: {}x{} is not square",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n))?;
        let rref = aug.rref();
        if rref.rank < n || rref.pivot_cols.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Singular);
        }
        Ok(rref.matrix.submatrix(0..n, n..2 * n))
    }
}

/// Pretty printer shared by `Debug` and `Display`: rows in brackets, columns
/// padded to equal width.
fn fmt_matrix(m: &ExactMatrix, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let cells: Vec<String> = m.data.iter().map(|v| v.to_string()).collect();
    let mut widths = vec![0usize; m.cols];
    for (i, cell) in cells.iter().enumerate() {
        let c = i % m.cols.max(1);
        widths[c] = widths[c].max(cell.len());
    }
    writeln!(f, "{}x{} [", m.rows, m.cols)?;
    for r in 0..m.rows {
        write!(f, "  ")?;
        for c in 0..m.cols {
            write!(f, "{:>w$} ", cells[r * m.cols + c], w = widths[c])?;
        }
        writeln!(f)?;
    }
    write!(f, "]")
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_matrix(self, f)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_matrix(self, f)
    }
}
