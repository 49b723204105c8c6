//! Kernel-dimension staircase of the Toeplitz family, defects and indices.
//!
//! For each family member the kernel dimension is
//! `d_k = 2q(k+m+1) - rank(T_k)`, with the conventions `d_{-m-1} = 0` and
//! `d_{n+1} = 2q(n+m+2)` (the unconstrained space of formal degree `n+m+1`).
//! The first differences `delta_k` form a nondecreasing staircase running from
//! the left defect `alpha` up to `2(p+q) - omega`; the indices `mu_i` are the
//! positions of its jumps. The right defect is read off the right-side data
//! alone via `delta_{n+1} = 2(p+q) - omega`, so no left-kernel machinery is
//! ever needed.

use crate::error::{Error, Result};
use crate::sequence::{toeplitz_tk, ASequence};

/// A distinct index value with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistinctIndex {
    pub lambda: i64,
    pub nu: usize,
}

/// Kernel dimensions, differences, defects and indices of a sequence.
#[derive(Clone, Debug)]
pub struct IndexTable {
    p: usize,
    q: usize,
    n: usize,
    m: usize,
    /// `d_k` for `k = -m-1 ..= n+1`.
    pub d: Vec<usize>,
    /// `delta_k = d_k - d_{k-1}` for `k = -m ..= n+1`.
    pub delta: Vec<usize>,
    /// Left defect `alpha = delta_{-m}`.
    pub alpha: usize,
    /// Right defect, from `delta_{n+1} = 2(p+q) - omega`.
    pub omega: usize,
    /// Indices `mu_1 <= ... <= mu_{2(p+q)-omega}`; the first `alpha` equal `-m-1`.
    pub mu: Vec<i64>,
    /// Distinct index values with multiplicities, ascending.
    pub distinct: Vec<DistinctIndex>,
    /// Multiplicity of each entry of `mu` (the size of its jump).
    pub multiplicity: Vec<usize>,
}

impl IndexTable {
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

    pub fn s(&self) -> usize {
        2 * (self.p + self.q)
    }

    /// `d_k` for `k` in `[-m-1, n+1]`.
    pub fn d_at(&self, k: i64) -> usize {
        let idx = k + self.m as i64 + 1;
        assert!((0..self.d.len() as i64).contains(&idx), "d_k index {k} out of range");
        self.d[idx as usize]
    }

    /// `delta_k` for `k` in `[-m, n+1]`.
    pub fn delta_at(&self, k: i64) -> usize {
        let idx = k + self.m as i64;
        assert!(
            (0..self.delta.len() as i64).contains(&idx),
            "delta_k index {k} out of range"
        );
        self.delta[idx as usize]
    }
}

/// Computes the full index table of a nonzero sequence.
pub fn compute_index_table(seq: &ASequence) -> Result<IndexTable> {
    if seq.is_zero() {
        return Err(Error::ZeroSequence);
    }
    let (p, q, n, m) = (seq.p(), seq.q(), seq.n(), seq.m());
    let s = 2 * (p + q);

    let mut d = Vec::with_capacity(n + m + 3);
    d.push(0); // k = -m-1
    for k in -(m as i64)..=(n as i64) {
        let t_k = toeplitz_tk(seq, k)?;
        let cols = t_k.cols();
        d.push(cols - t_k.rank());
    }
    d.push(2 * q * (n + m + 2)); // k = n+1

    let delta: Vec<usize> = d.windows(2).map(|w| w[1] - w[0]).collect();
    if delta.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Internal("kernel-dimension differences decreased".into()));
    }

    let alpha = delta[0];
    let delta_top = *delta.last().expect("nonempty");
    if delta_top > s {
        return Err(Error::Internal(format!(
            "delta at n+1 is {delta_top}, above the bound {s}"
        )));
    }
    let omega = s - delta_top;

    let table = IndexTable {
        p,
        q,
        n,
        m,
        d,
        delta,
        alpha,
        omega,
        mu: Vec::new(),
        distinct: Vec::new(),
        multiplicity: Vec::new(),
    };

    let mut mu = vec![-(m as i64) - 1; alpha];
    for i in alpha + 1..=s - omega {
        // largest k in [-m, n] with delta_k < i; exists since delta_{-m} = alpha < i
        let mut k = n as i64;
        while table.delta_at(k) >= i {
            k -= 1;
            debug_assert!(k >= -(m as i64), "index search ran past the left end");
        }
        mu.push(k);
    }

    let mut distinct: Vec<DistinctIndex> = Vec::new();
    for &value in &mu {
        match distinct.last_mut() {
            Some(last) if last.lambda == value => last.nu += 1,
            _ => distinct.push(DistinctIndex {
                lambda: value,
                nu: 1,
            }),
        }
    }
    let multiplicity = mu
        .iter()
        .map(|&v| {
            distinct
                .iter()
                .find(|di| di.lambda == v)
                .expect("grouped from mu")
                .nu
        })
        .collect();

    Ok(IndexTable {
        mu,
        distinct,
        multiplicity,
        ..table
    })
}
