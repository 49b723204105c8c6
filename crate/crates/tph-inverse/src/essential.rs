//! Right essential polynomials: deterministic bases of the complement spaces.
//!
//! A polynomial of formal degree `k+m` lives in the kernel space of the family
//! member `T_k` through its stacked coefficient vector `(r_0; ...; r_{k+m})`.
//! At every jump of the staircase the space `N_{k+1}` exceeds `N_k + z N_k`;
//! a basis of a complement is selected greedily from the canonical kernel
//! basis of `N_{k+1}`, in ascending basis order, keeping each vector that
//! enlarges the span. The selection is deterministic, which makes every
//! downstream object reproducible even though any complement basis would do.

use num::Zero;

use crate::error::{Error, Result};
use crate::indices::IndexTable;
use crate::laurent::LaurentMatrix;
use crate::matrix::ExactMatrix;
use crate::rational::Rational;
use crate::sequence::{toeplitz_tk, ASequence};

/// The matrix of right essential polynomials together with the index of each
/// column.
#[derive(Clone, Debug)]
pub struct EssentialSet {
    p: usize,
    q: usize,
    n: usize,
    m: usize,
    /// `2q`-by-`2(p+q)`, powers in `[0, n+m+1]`, columns ordered by ascending
    /// index with ties in selection order.
    pub r: LaurentMatrix,
    /// Index of each column, equal to the `mu` list of the table.
    pub column_index: Vec<i64>,
}

impl EssentialSet {
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

    /// Builds a set from externally supplied data (for example transcribed
    /// reference values); shapes and the column count are validated, the
    /// essentiality of the columns is checked downstream.
    pub fn from_parts(
        p: usize,
        q: usize,
        n: usize,
        m: usize,
        r: LaurentMatrix,
        column_index: Vec<i64>,
    ) -> Result<Self> {
        if r.rows() != 2 * q || r.cols() != 2 * (p + q) {
            return Err(Error::ShapeMismatch(format!(
                "essential matrix is {}x{}, expected {}x{}",
                r.rows(),
                r.cols(),
                2 * q,
                2 * (p + q)
            )));
        }
        if column_index.len() != r.cols() {
            return Err(Error::ShapeMismatch(
                "one index required per essential column".into(),
            ));
        }
        Ok(EssentialSet {
            p,
            q,
            n,
            m,
            r,
            column_index,
        })
    }
}

/// Incremental exact rank tracker: rows kept in reduced echelon form.
struct RankTracker {
    dim: usize,
    /// `(lead column, normalized row)` sorted by lead column.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RankTracker {
    fn new(dim: usize) -> Self {
        RankTracker {
            dim,
            rows: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the tracked rows; inserts and returns `true` when a
    /// nonzero remainder is left, i.e. when `v` enlarges the span.
    fn try_insert(&mut self, mut v: Vec<Rational>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        for (lead, row) in &self.rows {
            if v[*lead].is_zero() {
                continue;
            }
            let f = v[*lead].clone();
            for (i, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    v[i] = &v[i] - &f * r;
                }
            }
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pos = self
            .rows
            .binary_search_by_key(&lead, |(l, _)| *l)
            .expect_err("duplicate lead column after reduction");
        self.rows.insert(pos, (lead, v));
        true
    }
}

/// Canonical coefficient-vector basis of the kernel space of formal degree
/// `k+m`: the kernel basis of `T_k` for `k <= n`, the identity for `k = n+1`.
fn kernel_space_basis(seq: &ASequence, k: i64) -> Result<ExactMatrix> {
    if k == seq.n() as i64 + 1 {
        return Ok(ExactMatrix::identity(2 * seq.q() * (seq.n() + seq.m() + 2)));
    }
    Ok(toeplitz_tk(seq, k)?.right_kernel_basis())
}

/// Extracts a full, deterministic set of `2(p+q)` right essential polynomials.
///
/// Requires `omega = 0`; a positive right defect would need the complement
/// construction, which this crate does not provide.
pub fn compute_right_essential_polys(
    seq: &ASequence,
    table: &IndexTable,
) -> Result<EssentialSet> {
    if table.omega > 0 {
        return Err(Error::DefectUnsupported { omega: table.omega });
    }
    if seq.is_zero() {
        return Err(Error::ZeroSequence);
    }
    let (p, q, n, m) = (seq.p(), seq.q(), seq.n(), seq.m());
    let width = 2 * q;

    // (index, stacked coefficient vector)
    let mut columns: Vec<(i64, Vec<Rational>)> = Vec::new();

    if table.alpha > 0 {
        // index -m-1: any basis of the constant kernel space works; take the
        // canonical one
        let basis = kernel_space_basis(seq, -(m as i64))?;
        if basis.cols() != table.alpha {
            return Err(Error::Internal(format!(
                "kernel at the left end has {} columns, alpha = {}",
                basis.cols(),
                table.alpha
            )));
        }
        for j in 0..basis.cols() {
            columns.push((-(m as i64) - 1, basis.column(j)));
        }
    }

    for k in -(m as i64)..=(n as i64) {
        let jump = table.delta_at(k + 1) - table.delta_at(k);
        if jump == 0 {
            continue;
        }
        let len_k = width * (k + m as i64 + 1) as usize;
        let len_next = len_k + width;

        let mut tracker = RankTracker::new(len_next);
        let base = kernel_space_basis(seq, k)?;
        for j in 0..base.cols() {
            let col = base.column(j);
            // same polynomial viewed one formal degree higher
            let mut embedded = col.clone();
            embedded.resize(len_next, Rational::zero());
            tracker.try_insert(embedded);
            // multiplied by z
            let mut shifted = vec![Rational::zero(); width];
            shifted.extend(col);
            tracker.try_insert(shifted);
        }
        let span_dim = 2 * table.d_at(k) - table.d_at(k - 1);
        if tracker.rank() != span_dim {
            return Err(Error::Internal(format!(
                "span of N_k + zN_k at k = {k} has rank {}, expected {span_dim}",
                tracker.rank()
            )));
        }

        let candidates = kernel_space_basis(seq, k + 1)?;
        let mut picked = 0;
        for j in 0..candidates.cols() {
            if picked == jump {
                break;
            }
            let col = candidates.column(j);
            if tracker.try_insert(col.clone()) {
                columns.push((k, col));
                picked += 1;
            }
        }
        if picked != jump {
            return Err(Error::Internal(format!(
                "complement at k = {k} yielded {picked} columns, expected {jump}"
            )));
        }
    }

    let produced: Vec<i64> = columns.iter().map(|(idx, _)| *idx).collect();
    if produced != table.mu {
        return Err(Error::Internal(format!(
            "produced indices {produced:?} disagree with the table {:?}",
            table.mu
        )));
    }

    let mut r = LaurentMatrix::zero(width, columns.len());
    for (j, (_, coeffs)) in columns.iter().enumerate() {
        for (t, chunk) in coeffs.chunks(width).enumerate() {
            for (i, v) in chunk.iter().enumerate() {
                if !v.is_zero() {
                    r.set_entry(t as i64, i, j, v.clone());
                }
            }
        }
    }

    EssentialSet::from_parts(p, q, n, m, r, produced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::compute_index_table;
    use crate::problem::TphProblem;
    use crate::sequence::build_generating_sequence;
    use crate::testdata;

    fn analyzed(prob: &TphProblem) -> (ASequence, IndexTable, EssentialSet) {
        let seq = build_generating_sequence(prob);
        let table = compute_index_table(&seq).unwrap();
        let ess = compute_right_essential_polys(&seq, &table).unwrap();
        (seq, table, ess)
    }

    /// Every column must vanish under the functional at shifts
    /// `mu_j + 1 ..= n`, i.e. the coefficients of `A(z) R_j(z)` at powers in
    /// that band are zero.
    fn assert_essential(seq: &ASequence, ess: &EssentialSet) {
        let prod = seq.generator().lmul(&ess.r).unwrap();
        for (j, &mu) in ess.column_index.iter().enumerate() {
            for i in mu + 1..=seq.n() as i64 {
                let coeff = prod.coeff(i);
                for row in 0..coeff.rows() {
                    assert!(
                        coeff.get(row, j).is_zero(),
                        "column {j} (index {mu}) has a nonzero middle coefficient at power {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn worked_example_full_set() {
        let (seq, table, ess) = analyzed(&testdata::worked_problem());
        assert_eq!(ess.column_index, vec![-1, 0, 0, 1]);
        assert_eq!(ess.r.cols(), 4);
        assert_eq!(ess.r.rows(), 2);
        assert!(ess.r.lo().unwrap() >= 0);
        assert!(ess.r.hi().unwrap() <= 7);
        assert_essential(&seq, &ess);
        assert_eq!(table.mu, ess.column_index);
    }

    #[test]
    fn degrees_respect_the_index() {
        let (seq, _, ess) = analyzed(&testdata::worked_problem());
        for (j, &mu) in ess.column_index.iter().enumerate() {
            let max_degree = mu + seq.m() as i64 + 1;
            for (power, coeff) in ess.r.iter() {
                if power > max_degree {
                    for row in 0..coeff.rows() {
                        assert!(coeff.get(row, j).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn full_space_complement_is_the_canonical_basis() {
        // A_0 = [[0,1],[1,0]] has trivial kernel, so the complement at the
        // single jump is the whole degree-1 space with its canonical basis:
        // e1, e2, z e1, z e2.
        let prob = TphProblem::scalar(0, 0, &[1], &[0]).unwrap();
        let (seq, _, ess) = analyzed(&prob);
        assert_eq!(ess.column_index, vec![0, 0, 0, 0]);
        assert_eq!(ess.r.coeff(0), ExactMatrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        assert_eq!(ess.r.coeff(1), ExactMatrix::from_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]));
        assert_essential(&seq, &ess);
    }

    #[test]
    fn positive_right_defect_is_rejected() {
        let prob = TphProblem::scalar(0, 0, &[1], &[1]).unwrap();
        let seq = build_generating_sequence(&prob);
        let table = compute_index_table(&seq).unwrap();
        assert_eq!(table.omega, 1);
        assert!(matches!(
            compute_right_essential_polys(&seq, &table),
            Err(Error::DefectUnsupported { omega: 1 })
        ));
    }

    #[test]
    fn reference_essential_matrix_is_essential() {
        // the transcribed reference matrix passes the same essentiality test
        let seq = build_generating_sequence(&testdata::worked_problem());
        let ess = EssentialSet::from_parts(
            1,
            1,
            3,
            3,
            testdata::worked_essential_r(),
            testdata::worked_indices(),
        )
        .unwrap();
        assert_essential(&seq, &ess);
    }

    #[test]
    fn produced_columns_strictly_enlarge_the_span() {
        let (seq, table, ess) = analyzed(&testdata::worked_problem());
        let width = 2 * seq.q();
        for (j, &mu) in ess.column_index.iter().enumerate() {
            if mu < -(seq.m() as i64) {
                continue;
            }
            let len_next = width * (mu + seq.m() as i64 + 2) as usize;
            let mut tracker = RankTracker::new(len_next);
            let base = kernel_space_basis(&seq, mu).unwrap();
            for c in 0..base.cols() {
                let col = base.column(c);
                let mut embedded = col.clone();
                embedded.resize(len_next, Rational::zero());
                tracker.try_insert(embedded);
                let mut shifted = vec![Rational::zero(); width];
                shifted.extend(col);
                tracker.try_insert(shifted);
            }
            let before = tracker.rank();
            let mut col = Vec::new();
            for t in 0..(len_next / width) as i64 {
                let coeff = ess.r.coeff(t);
                for row in 0..width {
                    col.push(coeff.get(row, j).clone());
                }
            }
            assert!(tracker.try_insert(col), "column {j} lies inside the span");
            assert_eq!(tracker.rank(), before + 1);
            let _ = table;
        }
    }
}
