//! The block-selection matrix: 0/1 diagonal blocks placed by distinct
//! indices and their multiplicities.
//!
//! Position `i` on the `s`-wide diagonal belongs to the `j`-th distinct index
//! exactly when `nu_1 + ... + nu_{j-1} < i <= nu_1 + ... + nu_j`; the block at
//! offset `-lambda_j` carries ones at those positions. Blocks whose offset
//! falls outside the `(m+1)`-by-`(n+1)` band grid contribute nothing, but the
//! positions they own still advance.

use std::collections::BTreeMap;

use num::One;

use crate::indices::IndexTable;
use crate::matrix::ExactMatrix;
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct PiStructure {
    /// Diagonal width `2(p+q)`.
    pub s: usize,
    /// Nonzero blocks only, keyed by offset `k` in `[-n, m]`.
    pub blocks: BTreeMap<i64, ExactMatrix>,
    /// Band assembly: `(m+1)s`-by-`(n+1)s`, block `(r, c)` equal to the block
    /// at offset `r - c`.
    pub assembled: ExactMatrix,
    /// The same assembly restricted to each diagonal column group of widths
    /// `(q, q, p, p)`: `(m+1)w_j`-by-`(n+1)w_j` each.
    pub group_restrictions: Vec<ExactMatrix>,
}

impl PiStructure {
    /// Block at offset `k` (zero if absent).
    pub fn block(&self, k: i64) -> ExactMatrix {
        self.blocks
            .get(&k)
            .cloned()
            .unwrap_or_else(|| ExactMatrix::zeros(self.s, self.s))
    }

    /// Offsets and widths of the four diagonal groups.
    pub fn groups(p: usize, q: usize) -> [(usize, usize); 4] {
        [(0, q), (q, q), (2 * q, p), (2 * q + p, p)]
    }
}

/// Builds the selection structure from the distinct indices of a table.
pub fn build_pi(table: &IndexTable) -> PiStructure {
    let s = table.s();
    let (p, q, n, m) = (table.p(), table.q(), table.n(), table.m());

    let mut blocks: BTreeMap<i64, ExactMatrix> = BTreeMap::new();
    let mut cum = 0usize;
    for di in &table.distinct {
        let offset = -di.lambda;
        if offset >= -(n as i64) && offset <= m as i64 {
            let blk = blocks
                .entry(offset)
                .or_insert_with(|| ExactMatrix::zeros(s, s));
            for i in cum..cum + di.nu {
                blk.set(i, i, Rational::one());
            }
        }
        cum += di.nu;
    }
    blocks.retain(|_, b| !b.is_zero());

    let block_at = |k: i64| -> Option<&ExactMatrix> { blocks.get(&k) };
    let mut assembled = ExactMatrix::zeros((m + 1) * s, (n + 1) * s);
    for r in 0..=m {
        for c in 0..=n {
            if let Some(b) = block_at(r as i64 - c as i64) {
                assembled.set_block(r * s, c * s, b);
            }
        }
    }

    let group_restrictions = PiStructure::groups(p, q)
        .iter()
        .map(|&(offset, width)| {
            let mut g = ExactMatrix::zeros((m + 1) * width, (n + 1) * width);
            for r in 0..=m {
                for c in 0..=n {
                    if let Some(b) = block_at(r as i64 - c as i64) {
                        let slice = b.submatrix(offset..offset + width, offset..offset + width);
                        g.set_block(r * width, c * width, &slice);
                    }
                }
            }
            g
        })
        .collect();

    PiStructure {
        s,
        blocks,
        assembled,
        group_restrictions,
    }
}
