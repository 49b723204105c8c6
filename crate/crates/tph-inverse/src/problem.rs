//! Problem statement: block sizes and the two coefficient sequences defining
//! the Toeplitz and Hankel summands.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::rational::rat_int;

/// Which combination of the two summands to invert.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("unknown sign `{other}`"))),
        }
    }
}

/// A block Toeplitz-plus-Hankel inversion problem.
///
/// The Toeplitz part has block entry `a_{i-j}` and the Hankel part `b_{i+j}`
/// for block row `i = 0..n` and block column `j = 0..m`, every block `p`-by-`q`.
/// `a` covers `j = -m..n` and `b` covers `j = 0..n+m`, each `n+m+1` blocks.
#[derive(Clone, PartialEq, Eq)]
pub struct TphProblem {
    p: usize,
    q: usize,
    n: usize,
    m: usize,
    a: Vec<ExactMatrix>,
    b: Vec<ExactMatrix>,
}

impl TphProblem {
    pub fn new(
        p: usize,
        q: usize,
        n: usize,
        m: usize,
        a: Vec<ExactMatrix>,
        b: Vec<ExactMatrix>,
    ) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidProblem("block sizes must be positive".into()));
        }
        let count = n + m + 1;
        if a.len() != count {
            return Err(Error::InvalidProblem(format!(
                "expected {count} Toeplitz blocks, found {}",
                a.len()
            )));
        }
        if b.len() != count {
            return Err(Error::InvalidProblem(format!(
                "expected {count} Hankel blocks, found {}",
                b.len()
            )));
        }
        for blk in a.iter().chain(b.iter()) {
            if blk.rows() != p || blk.cols() != q {
                return Err(Error::InvalidProblem(format!(
                    "block is {}x{}, expected {p}x{q}",
                    blk.rows(),
                    blk.cols()
                )));
            }
        }
        Ok(TphProblem { p, q, n, m, a, b })
    }

    /// Scalar (`p = q = 1`) problem from integer coefficient lists.
    pub fn scalar(n: usize, m: usize, a: &[i64], b: &[i64]) -> Result<Self> {
        let wrap = |vals: &[i64]| {
            vals.iter()
                .map(|&v| ExactMatrix::from_fn(1, 1, |_, _| rat_int(v)))
                .collect()
        };
        Self::new(1, 1, n, m, wrap(a), wrap(b))
    }

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

    /// Toeplitz coefficient block, `j` in `[-m, n]`.
    pub fn a(&self, j: i64) -> &ExactMatrix {
        let idx = j + self.m as i64;
        assert!(
            (0..self.a.len() as i64).contains(&idx),
            "toeplitz coefficient index {j} out of range"
        );
        &self.a[idx as usize]
    }

    /// Hankel coefficient block, `j` in `[0, n+m]`.
    pub fn b(&self, j: i64) -> &ExactMatrix {
        assert!(
            (0..self.b.len() as i64).contains(&j),
            "hankel coefficient index {j} out of range"
        );
        &self.b[j as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(ExactMatrix::is_zero) && self.b.iter().all(ExactMatrix::is_zero)
    }

    /// Dense Toeplitz summand, `(n+1)p`-by-`(m+1)q`.
    pub fn toeplitz(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros((self.n + 1) * self.p, (self.m + 1) * self.q);
        for i in 0..=self.n {
            for j in 0..=self.m {
                t.set_block(i * self.p, j * self.q, self.a(i as i64 - j as i64));
            }
        }
        t
    }

    /// Dense Hankel summand, `(n+1)p`-by-`(m+1)q`.
    pub fn hankel(&self) -> ExactMatrix {
        let mut h = ExactMatrix::zeros((self.n + 1) * self.p, (self.m + 1) * self.q);
        for i in 0..=self.n {
            for j in 0..=self.m {
                h.set_block(i * self.p, j * self.q, self.b((i + j) as i64));
            }
        }
        h
    }

    /// Dense `T + H` or `T - H`.
    pub fn combined(&self, sign: Sign) -> ExactMatrix {
        let t = self.toeplitz();
        let h = self.hankel();
        match sign {
            Sign::Plus => t.add(&h).expect("same shape"),
            Sign::Minus => t.sub(&h).expect("same shape"),
        }
    }

    /// The problem whose Toeplitz and Hankel summands are the transposes of
    /// this problem's: block sizes swap, `n` and `m` swap, the Toeplitz
    /// coefficients reverse and every block transposes.
    pub fn transposed(&self) -> TphProblem {
        let a = (0..self.a.len())
            .map(|idx| self.a[self.a.len() - 1 - idx].transpose())
            .collect();
        let b = self.b.iter().map(ExactMatrix::transpose).collect();
        TphProblem {
            p: self.q,
            q: self.p,
            n: self.m,
            m: self.n,
            a,
            b,
        }
    }
}

impl fmt::Debug for TphProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TphProblem {{ p: {}, q: {}, n: {}, m: {} }}",
            self.p, self.q, self.n, self.m
        )
    }
}
