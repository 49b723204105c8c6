//! Matrix Laurent polynomials: integer-power-indexed coefficient matrices.
//!
//! A [`LaurentMatrix`] stores only its nonzero coefficients; absent powers are
//! zero and the empty map is the zero function. All coefficients of one value
//! share the same shape. The polynomial-matrix determinant and the unimodular
//! inverse work in the substituted variable `w = z^-1` and stay exact by
//! evaluation at rational points followed by Lagrange interpolation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::rational::{rat_int, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    coeffs: BTreeMap<i64, ExactMatrix>,
}

impl LaurentMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LaurentMatrix {
            rows,
            cols,
            coeffs: BTreeMap::new(),
        }
    }

    /// Identity at power 0.
    pub fn identity(n: usize) -> Self {
        Self::monomial(0, ExactMatrix::identity(n))
    }

    /// Single-coefficient function `M * z^power`.
    pub fn monomial(power: i64, matrix: ExactMatrix) -> Self {
        let mut l = Self::zero(matrix.rows(), matrix.cols());
        if !matrix.is_zero() {
            l.coeffs.insert(power, matrix);
        }
        l
    }

    pub fn constant(matrix: ExactMatrix) -> Self {
        Self::monomial(0, matrix)
    }

    /// Diagonal matrix `diag(z^{powers[0]}, ..., z^{powers[k-1]})`.
    pub fn diag_powers(powers: &[i64]) -> Self {
        let n = powers.len();
        let mut l = Self::zero(n, n);
        for (i, &p) in powers.iter().enumerate() {
            let mut m = l
                .coeffs
                .remove(&p)
                .unwrap_or_else(|| ExactMatrix::zeros(n, n));
            m.set(i, i, Rational::one());
            l.coeffs.insert(p, m);
        }
        l
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Lowest stored power; `None` for the zero function.
    pub fn lo(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest stored power; `None` for the zero function.
    pub fn hi(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at power `k` (zero matrix if absent).
    pub fn coeff(&self, k: i64) -> ExactMatrix {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| ExactMatrix::zeros(self.rows, self.cols))
    }

    pub fn coeff_ref(&self, k: i64) -> Option<&ExactMatrix> {
        self.coeffs.get(&k)
    }

    /// Iterates stored (power, coefficient) pairs in ascending power order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &ExactMatrix)> {
        self.coeffs.iter().map(|(&k, m)| (k, m))
    }

    pub fn set_coeff(&mut self, k: i64, matrix: ExactMatrix) -> Result<()> {
        if matrix.rows() != self.rows || matrix.cols() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "coefficient {}x{} in a {}x{} Laurent matrix",
                matrix.rows(),
                matrix.cols(),
                self.rows,
                self.cols
            )));
        }
        if matrix.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, matrix);
        }
        Ok(())
    }

    /// Adds `delta` into the coefficient at power `k`.
    pub fn add_to_coeff(&mut self, k: i64, delta: &ExactMatrix) -> Result<()> {
        let current = self.coeff(k);
        self.set_coeff(k, current.add(delta)?)
    }

    /// Writes `value` into entry `(r, c)` of the coefficient at power `k`.
    pub fn set_entry(&mut self, k: i64, r: usize, c: usize, value: Rational) {
        let mut m = self.coeff(k);
        m.set(r, c, value);
        self.set_coeff(k, m).expect("same-shape coefficient");
    }

    pub fn add(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("Laurent add".into()));
        }
        let mut out = self.clone();
        for (k, m) in other.iter() {
            out.add_to_coeff(k, m)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentMatrix {
        LaurentMatrix {
            rows: self.rows,
            cols: self.cols,
            coeffs: self.coeffs.iter().map(|(&k, m)| (k, m.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> LaurentMatrix {
        if s.is_zero() {
            return Self::zero(self.rows, self.cols);
        }
        LaurentMatrix {
            rows: self.rows,
            cols: self.cols,
            coeffs: self.coeffs.iter().map(|(&k, m)| (k, m.scale(s))).collect(),
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> LaurentMatrix {
        LaurentMatrix {
            rows: self.rows,
            cols: self.cols,
            coeffs: self.coeffs.iter().map(|(&p, m)| (p + k, m.clone())).collect(),
        }
    }

    /// Scales column `j` by `z^{shifts[j]}`; realizes products with diagonal
    /// power matrices such as `d(z)` and its inverse.
    pub fn shift_columns(&self, shifts: &[i64]) -> LaurentMatrix {
        assert_eq!(shifts.len(), self.cols, "one shift per column");
        let mut out = Self::zero(self.rows, self.cols);
        for (p, m) in self.iter() {
            for (j, shift) in shifts.iter().enumerate() {
                let col = m.column(j);
                if col.iter().all(Zero::is_zero) {
                    continue;
                }
                let target = p + shift;
                let mut c = out.coeff(target);
                for (i, v) in col.into_iter().enumerate() {
                    let cur = c.get(i, j) + v;
                    c.set(i, j, cur);
                }
                out.set_coeff(target, c).expect("same shape");
            }
        }
        out
    }

    /// Matrix product; the coefficient of `z^k` is the convolution
    /// `sum_j A_j B_{k-j}`.
    pub fn lmul(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "lmul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                let prod = a.matmul(b)?;
                out.add_to_coeff(i + j, &prod)?;
            }
        }
        Ok(out)
    }

    /// Row slice as a new Laurent matrix.
    pub fn sub_rows(&self, rows: Range<usize>) -> LaurentMatrix {
        let mut out = Self::zero(rows.len(), self.cols);
        for (k, m) in self.iter() {
            out.set_coeff(k, m.submatrix(rows.clone(), 0..self.cols))
                .expect("same shape");
        }
        out
    }

    /// Column slice as a new Laurent matrix.
    pub fn sub_cols(&self, cols: Range<usize>) -> LaurentMatrix {
        let mut out = Self::zero(self.rows, cols.len());
        for (k, m) in self.iter() {
            out.set_coeff(k, m.submatrix(0..self.rows, cols.clone()))
                .expect("same shape");
        }
        out
    }

    pub fn column(&self, j: usize) -> LaurentMatrix {
        self.sub_cols(j..j + 1)
    }

    pub fn vstack(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch("Laurent vstack".into()));
        }
        let mut out = Self::zero(self.rows + other.rows, self.cols);
        let powers: std::collections::BTreeSet<i64> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .collect();
        for k in powers {
            out.set_coeff(k, self.coeff(k).vstack(&other.coeff(k))?)?;
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch("Laurent hstack".into()));
        }
        let mut out = Self::zero(self.rows, self.cols + other.cols);
        let powers: std::collections::BTreeSet<i64> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .collect();
        for k in powers {
            out.set_coeff(k, self.coeff(k).hstack(&other.coeff(k))?)?;
        }
        Ok(out)
    }

    /// Value at `z^-1 = t`, i.e. the substituted polynomial in `w = z^-1`
    /// evaluated at `w = t`. Requires all powers nonpositive.
    fn eval_in_w(&self, t: &Rational) -> ExactMatrix {
        let mut acc = ExactMatrix::zeros(self.rows, self.cols);
        for (k, m) in self.iter() {
            debug_assert!(k <= 0);
            let tw = pow_rational(t, (-k) as usize);
            acc = acc.add(&m.scale(&tw)).expect("same shape");
        }
        acc
    }
}

impl fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "LaurentMatrix {}x{} (zero)", self.rows, self.cols);
        }
        writeln!(f, "LaurentMatrix {}x{} {{", self.rows, self.cols)?;
        for (k, m) in self.iter() {
            writeln!(f, "z^{k}: {m}")?;
        }
        write!(f, "}}")
    }
}

fn pow_rational(base: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Checks the `polymat_*` preconditions: square and no positive powers.
fn check_polymat_input(u: &LaurentMatrix) -> Result<()> {
    if u.rows() != u.cols() {
        return Err(Error::ShapeMismatch(format!(
            "polynomial-matrix op on a {}x{} input",
            u.rows(),
            u.cols()
        )));
    }
    if let Some(hi) = u.hi() {
        if hi > 0 {
            return Err(Error::PowerRange {
                have_lo: u.lo().unwrap(),
                have_hi: hi,
                lo: i64::MIN,
                hi: 0,
            });
        }
    }
    Ok(())
}

/// Exact determinant of a square matrix polynomial in `z^-1`, returned as a
/// 1-by-1 Laurent matrix with nonpositive powers.
///
/// Degree bookkeeping: with `D` the depth in `w = z^-1`, `det` has degree at
/// most `s*D`, so evaluation at `s*D + 1` distinct rational points followed by
/// interpolation recovers it exactly.
pub fn polymat_det(u: &LaurentMatrix) -> Result<LaurentMatrix> {
    check_polymat_input(u)?;
    let s = u.rows();
    if u.is_zero() && s > 0 {
        return Ok(LaurentMatrix::zero(1, 1));
    }
    let depth = u.lo().map_or(0, |lo| (-lo) as usize);
    let npoints = s * depth + 1;
    let points = eval_points(npoints);
    let values: Result<Vec<Rational>> = points.iter().map(|t| u.eval_in_w(t).det()).collect();
    let poly = interpolate(&points, &values?);
    Ok(poly_to_laurent_1x1(&poly))
}

/// Exact inverse of a unimodular matrix polynomial in `z^-1`.
///
/// The determinant must be a nonzero constant `c`; then the constant term
/// `U(0)` is invertible (its determinant is `c`) and the inverse is the
/// polynomial in `w = z^-1` of degree at most `(s-1)*D` obtained from the
/// power-series recursion `U_0 V_k = -sum_{j>=1} U_j V_{k-j}`, which
/// terminates exactly because unimodularity makes the series finite. The
/// product `U V = I` is re-verified before the result is returned.
pub fn polymat_inverse_unimodular(u: &LaurentMatrix) -> Result<LaurentMatrix> {
    check_polymat_input(u)?;
    let det = polymat_det(u)?;
    let det_const = unimodular_constant(&det)?;
    debug_assert!(!det_const.is_zero());

    let s = u.rows();
    let depth = u.lo().map_or(0, |lo| (-lo) as usize);
    let u0_inv = u
        .coeff(0)
        .inverse()
        .map_err(|_| Error::Internal("constant term of a unimodular matrix is singular".into()))?;

    let degree_bound = s.saturating_sub(1) * depth;
    let mut series: Vec<ExactMatrix> = vec![u0_inv.clone()];
    for k in 1..=degree_bound {
        let mut rhs = ExactMatrix::zeros(s, s);
        for j in 1..=depth.min(k) {
            if let Some(uj) = u.coeff_ref(-(j as i64)) {
                rhs = rhs.sub(&uj.matmul(&series[k - j])?)?;
            }
        }
        series.push(u0_inv.matmul(&rhs)?);
    }

    let mut out = LaurentMatrix::zero(s, s);
    for (k, coeff) in series.into_iter().enumerate() {
        out.set_coeff(-(k as i64), coeff)?;
    }

    let product = u.lmul(&out)?;
    if product != LaurentMatrix::identity(s) {
        return Err(Error::Internal(
            "unimodular inverse verification failed: U * V != I".into(),
        ));
    }
    Ok(out)
}

/// Extracts the constant from a 1-by-1 determinant, rejecting zero and
/// non-constant determinants.
pub fn unimodular_constant(det: &LaurentMatrix) -> Result<Rational> {
    if det.is_zero() {
        return Err(Error::NotUnimodular("determinant is zero".into()));
    }
    if det.lo() != Some(0) || det.hi() != Some(0) {
        return Err(Error::NotUnimodular(format!(
            "determinant has powers in [{}, {}]",
            det.lo().unwrap(),
            det.hi().unwrap()
        )));
    }
    Ok(det.coeff(0).get(0, 0).clone())
}

/// Evaluation abscissas 0, 1, -1, 2, -2, ...
fn eval_points(n: usize) -> Vec<Rational> {
    (0..n)
        .map(|i| {
            let v = (i as i64 + 1) / 2;
            rat_int(if i % 2 == 0 { -v } else { v })
        })
        .collect()
}

fn poly_to_laurent_1x1(poly: &[Rational]) -> LaurentMatrix {
    let mut out = LaurentMatrix::zero(1, 1);
    for (deg, c) in poly.iter().enumerate() {
        if !c.is_zero() {
            out.set_entry(-(deg as i64), 0, 0, c.clone());
        }
    }
    out
}

/// Lagrange interpolation through distinct points, coefficients low to high,
/// trailing zeros trimmed.
fn interpolate(points: &[Rational], values: &[Rational]) -> Vec<Rational> {
    assert_eq!(points.len(), values.len());
    let n = points.len();
    // master polynomial F(x) = prod (x - x_j)
    let mut master = vec![Rational::one()];
    for x in points {
        master = poly_mul_linear(&master, x);
    }
    let mut acc = vec![Rational::zero(); n];
    for k in 0..n {
        if values[k].is_zero() {
            continue;
        }
        // q = F / (x - x_k), exact since F(x_k) = 0
        let q = poly_div_linear(&master, &points[k]);
        let denom = poly_eval(&q, &points[k]);
        let scale = &values[k] / denom;
        for (i, c) in q.iter().enumerate() {
            acc[i] += c * &scale;
        }
    }
    while acc.last().is_some_and(Zero::is_zero) {
        acc.pop();
    }
    acc
}

/// Multiplies a polynomial by `(x - root)`.
fn poly_mul_linear(poly: &[Rational], root: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); poly.len() + 1];
    for (i, c) in poly.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c * root;
    }
    out
}

/// Synthetic division by `(x - root)` for a polynomial that vanishes at `root`.
fn poly_div_linear(poly: &[Rational], root: &Rational) -> Vec<Rational> {
    let n = poly.len();
    debug_assert!(n >= 1);
    let mut q = vec![Rational::zero(); n - 1];
    let mut carry = Rational::zero();
    for i in (1..n).rev() {
        carry = &poly[i] + root * &carry;
        q[i - 1] = carry.clone();
    }
    debug_assert!((&poly[0] + root * &carry).is_zero(), "nonzero remainder");
    q
}

fn poly_eval(poly: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in poly.iter().rev() {
        acc = acc * x + c;
    }
    acc
}
