//! Inverse formulas: band factors built from the essential polynomials,
//! the block Toeplitz generalized inverse, and the direct and blockwise
//! plus/minus formulas.

use std::collections::BTreeMap;

use num::Zero;

use crate::conformation::{conform_left, ConformationData};
use crate::error::{Error, Result};
use crate::essential::{compute_right_essential_polys, EssentialSet};
use crate::indices::{compute_index_table, IndexTable};
use crate::laurent::LaurentMatrix;
use crate::matrix::ExactMatrix;
use crate::mosaic::exchange_matrix;
use crate::pi::{build_pi, PiStructure};
use crate::problem::{Sign, TphProblem};
use crate::rational::{rat, Rational};
use crate::sequence::{build_generating_sequence, ASequence};

/// The right and left essential matrices split into their natural row and
/// column halves, plus the fine four-group partition used by the blockwise
/// formula.
#[derive(Clone, Debug)]
pub struct PartitionedEssentials {
    /// Top `q` rows of the right matrix.
    pub r1: LaurentMatrix,
    /// Bottom `q` rows.
    pub r2: LaurentMatrix,
    /// Left `p` columns of the left matrix.
    pub l1: LaurentMatrix,
    /// Right `p` columns.
    pub l2: LaurentMatrix,
    /// `r_fine[i][j]`: rows of half `i`, columns of group `j` (widths q,q,p,p).
    pub r_fine: Vec<Vec<LaurentMatrix>>,
    /// `l_fine[j][i]`: rows of group `j`, columns of half `i`.
    pub l_fine: Vec<Vec<LaurentMatrix>>,
    /// Index powers per diagonal group.
    pub d_groups: Vec<Vec<i64>>,
}

/// Splits the essential matrices by rows (right) and columns (left), and both
/// by the four diagonal column groups of widths `(q, q, p, p)`.
pub fn partition_essentials(ess: &EssentialSet, l: &LaurentMatrix) -> PartitionedEssentials {
    let (p, q) = (ess.p(), ess.q());
    let groups = PiStructure::groups(p, q);

    let r1 = ess.r.sub_rows(0..q);
    let r2 = ess.r.sub_rows(q..2 * q);
    let l1 = l.sub_cols(0..p);
    let l2 = l.sub_cols(p..2 * p);

    let r_fine = vec![
        groups
            .iter()
            .map(|&(o, w)| r1.sub_cols(o..o + w))
            .collect::<Vec<_>>(),
        groups
            .iter()
            .map(|&(o, w)| r2.sub_cols(o..o + w))
            .collect::<Vec<_>>(),
    ];
    let l_fine = groups
        .iter()
        .map(|&(o, w)| vec![l1.sub_rows(o..o + w), l2.sub_rows(o..o + w)])
        .collect();
    let d_groups = groups
        .iter()
        .map(|&(o, w)| ess.column_index[o..o + w].to_vec())
        .collect();

    PartitionedEssentials {
        r1,
        r2,
        l1,
        l2,
        r_fine,
        l_fine,
        d_groups,
    }
}

/// Lower-triangular band block Toeplitz matrix of the coefficients of `poly`
/// at powers `0..count-1`: block `(r, c)` is the coefficient at `r - c`.
pub fn lower_band(poly: &LaurentMatrix, count: usize) -> ExactMatrix {
    let (br, bc) = (poly.rows(), poly.cols());
    let mut out = ExactMatrix::zeros(count * br, count * bc);
    for k in 0..count as i64 {
        if let Some(coeff) = poly.coeff_ref(k) {
            for r in 0..count {
                let c = r as i64 - k;
                if c >= 0 {
                    out.set_block(r * br, c as usize * bc, coeff);
                }
            }
        }
    }
    out
}

/// Upper-triangular band block Toeplitz matrix of the coefficients of `poly`
/// at powers `0..-(count-1)`: block `(r, c)` is the coefficient at `r - c`.
pub fn upper_band(poly: &LaurentMatrix, count: usize) -> ExactMatrix {
    let (br, bc) = (poly.rows(), poly.cols());
    let mut out = ExactMatrix::zeros(count * br, count * bc);
    for k in 0..count as i64 {
        if let Some(coeff) = poly.coeff_ref(-k) {
            for r in 0..count {
                let c = r as i64 + k;
                if c < count as i64 {
                    out.set_block(r * br, c as usize * bc, coeff);
                }
            }
        }
    }
    out
}

/// The four band factors of the plus/minus formulas plus their exchange
/// counterparts.
#[derive(Clone, Debug)]
pub struct BandFactors {
    pub t_r1: ExactMatrix,
    pub t_r2: ExactMatrix,
    pub t_l1: ExactMatrix,
    pub t_l2: ExactMatrix,
    pub h_r2: ExactMatrix,
    pub h_l1: ExactMatrix,
}

pub fn band_factors(
    part: &PartitionedEssentials,
    p: usize,
    q: usize,
    n: usize,
    m: usize,
) -> BandFactors {
    let t_r1 = lower_band(&part.r1, m + 1);
    let t_r2 = lower_band(&part.r2, m + 1);
    let t_l1 = upper_band(&part.l1, n + 1);
    let t_l2 = upper_band(&part.l2, n + 1);
    let h_r2 = exchange_matrix(m + 1, q)
        .matmul(&t_r2)
        .expect("exchange shape");
    let h_l1 = t_l1
        .matmul(&exchange_matrix(n + 1, p))
        .expect("exchange shape");
    BandFactors {
        t_r1,
        t_r2,
        t_l1,
        t_l2,
        h_r2,
        h_l1,
    }
}

/// Generalized inverse of the stacked block Toeplitz matrix:
/// band of right coefficients, selection matrix, band of left coefficients.
pub fn pinv_block_toeplitz(
    seq: &ASequence,
    ess: &EssentialSet,
    conf: &ConformationData,
    table: &IndexTable,
) -> Result<ExactMatrix> {
    let (n, m) = (seq.n(), seq.m());
    let left = lower_band(&ess.r, m + 1);
    let pi = build_pi(table);
    let right = upper_band(&conf.l, n + 1);
    left.matmul(&pi.assembled)?.matmul(&right)
}

/// Evaluates the plus/minus formula with caller-supplied essential data:
/// `1/2 (T_R1 +- H_R2) Pi (T_L2 +- H_L1)`. Nothing is recomputed.
pub fn pinv_tph_from_essentials(
    prob: &TphProblem,
    ess: &EssentialSet,
    l: &LaurentMatrix,
    table: &IndexTable,
    sign: Sign,
) -> Result<ExactMatrix> {
    let part = partition_essentials(ess, l);
    let bf = band_factors(&part, prob.p(), prob.q(), prob.n(), prob.m());
    let pi = build_pi(table);
    let (left, right) = match sign {
        Sign::Plus => (bf.t_r1.add(&bf.h_r2)?, bf.t_l2.add(&bf.h_l1)?),
        Sign::Minus => (bf.t_r1.sub(&bf.h_r2)?, bf.t_l2.sub(&bf.h_l1)?),
    };
    Ok(left
        .matmul(&pi.assembled)?
        .matmul(&right)?
        .scale(&rat(1, 2)))
}

/// The same inverse through the four-group formula with the restricted
/// selection matrices; must agree with the direct route entrywise.
pub fn blockwise_from_essentials(
    prob: &TphProblem,
    ess: &EssentialSet,
    l: &LaurentMatrix,
    table: &IndexTable,
    sign: Sign,
) -> Result<ExactMatrix> {
    let (p, q, n, m) = (prob.p(), prob.q(), prob.n(), prob.m());
    let part = partition_essentials(ess, l);
    let pi = build_pi(table);
    let j_rows = exchange_matrix(m + 1, q);
    let j_cols = exchange_matrix(n + 1, p);

    let mut tt = ExactMatrix::zeros((m + 1) * q, (n + 1) * p);
    let mut hh = tt.clone();
    let mut th = tt.clone();
    let mut ht = tt.clone();
    for g in 0..4 {
        let t_r1j = lower_band(&part.r_fine[0][g], m + 1);
        let t_r2j = lower_band(&part.r_fine[1][g], m + 1);
        let h_r2j = j_rows.matmul(&t_r2j)?;
        let t_lj1 = upper_band(&part.l_fine[g][0], n + 1);
        let t_lj2 = upper_band(&part.l_fine[g][1], n + 1);
        let h_lj1 = t_lj1.matmul(&j_cols)?;
        let pij = &pi.group_restrictions[g];

        tt = tt.add(&t_r1j.matmul(pij)?.matmul(&t_lj2)?)?;
        hh = hh.add(&h_r2j.matmul(pij)?.matmul(&h_lj1)?)?;
        th = th.add(&t_r1j.matmul(pij)?.matmul(&h_lj1)?)?;
        ht = ht.add(&h_r2j.matmul(pij)?.matmul(&t_lj2)?)?;
    }
    let cross = th.add(&ht)?;
    let total = match sign {
        Sign::Plus => tt.add(&hh)?.add(&cross)?,
        Sign::Minus => tt.add(&hh)?.sub(&cross)?,
    };
    Ok(total.scale(&rat(1, 2)))
}

/// Full pipeline routed through the blockwise formula; agrees with
/// [`pinv_tph`] entrywise on every input.
pub fn pinv_tph_blockwise(prob: &TphProblem, sign: Sign) -> Result<ExactMatrix> {
    let options = PinvOptions {
        method: Method::Blockwise,
        ..PinvOptions::default()
    };
    Ok(pinv_tph(prob, sign, &options)?.pinv)
}

/// Assembly route selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Direct,
    Blockwise,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Method::Direct),
            "blockwise" => Ok(Method::Blockwise),
            other => Err(Error::Parse(format!("unknown method `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct PinvOptions {
    pub method: Method,
    /// Verify the generalized-inverse identity (and the two-sided inverse
    /// identities when the matrix is square and nonsingular) on the result.
    pub check: bool,
    /// When the right defect is positive, try the transposed problem and
    /// transpose its answer. Off by default.
    pub allow_transpose_fallback: bool,
}

/// Everything a pipeline run reports besides the inverse itself.
#[derive(Clone, Debug, Default)]
pub struct Diagnostics {
    /// Constant determinant of the stacked conformation matrix.
    pub det_const: Option<Rational>,
    /// The input matrix is square with a nonzero determinant.
    pub invertible: bool,
    pub used_transpose_fallback: bool,
    /// The input matrix was zero and the pipeline was bypassed.
    pub zero_input: bool,
    /// Verification outcomes recorded under `check`.
    pub checks: BTreeMap<String, bool>,
}

#[derive(Clone, Debug)]
pub struct TphResult {
    pub pinv: ExactMatrix,
    pub sign: Sign,
    /// Absent only for the zero short-circuit on an all-zero problem.
    pub table: Option<IndexTable>,
    pub diagnostics: Diagnostics,
}

impl TphResult {
    pub fn checks_passed(&self) -> bool {
        self.diagnostics.checks.values().all(|&ok| ok)
    }
}

/// Shared intermediate state of one analysis run.
pub struct Pipeline {
    pub seq: ASequence,
    pub table: IndexTable,
    pub ess: EssentialSet,
    pub conf: ConformationData,
}

/// Runs sequence construction, index analysis, essential extraction and
/// conformation once; both signs can then be assembled from the result.
pub fn run_pipeline(prob: &TphProblem) -> Result<Pipeline> {
    let seq = build_generating_sequence(prob);
    let table = compute_index_table(&seq)?;
    let ess = compute_right_essential_polys(&seq, &table)?;
    let conf = conform_left(&seq, &ess)?;
    Ok(Pipeline {
        seq,
        table,
        ess,
        conf,
    })
}

/// Full inversion: builds the dense matrix, short-circuits the zero case,
/// runs the pipeline and assembles the requested sign.
pub fn pinv_tph(prob: &TphProblem, sign: Sign, options: &PinvOptions) -> Result<TphResult> {
    let dense = prob.combined(sign);
    if dense.is_zero() {
        // the zero matrix has the zero matrix of transposed shape as a
        // generalized inverse; the index machinery excludes this input
        let table = if prob.is_zero() {
            None
        } else {
            Some(compute_index_table(&build_generating_sequence(prob))?)
        };
        return Ok(TphResult {
            pinv: ExactMatrix::zeros(dense.cols(), dense.rows()),
            sign,
            table,
            diagnostics: Diagnostics {
                zero_input: true,
                ..Diagnostics::default()
            },
        });
    }

    let seq = build_generating_sequence(prob);
    let table = compute_index_table(&seq)?;
    if table.omega > 0 {
        if !options.allow_transpose_fallback {
            return Err(Error::DefectUnsupported { omega: table.omega });
        }
        // a matrix one-inverts the transpose exactly when its transpose
        // one-inverts the original
        let flipped = prob.transposed();
        let mut inner_options = *options;
        inner_options.allow_transpose_fallback = false;
        let inner = pinv_tph(&flipped, sign, &inner_options)?;
        let pinv = inner.pinv.transpose();
        let mut diagnostics = inner.diagnostics;
        diagnostics.used_transpose_fallback = true;
        diagnostics.invertible = {
            let d = &dense;
            d.is_square() && !d.det()?.is_zero()
        };
        return Ok(TphResult {
            pinv,
            sign,
            table: inner.table,
            diagnostics,
        });
    }

    let ess = compute_right_essential_polys(&seq, &table)?;
    let conf = conform_left(&seq, &ess)?;
    let pinv = match options.method {
        Method::Direct => pinv_tph_from_essentials(prob, &ess, &conf.l, &table, sign)?,
        Method::Blockwise => blockwise_from_essentials(prob, &ess, &conf.l, &table, sign)?,
    };

    let invertible = dense.is_square() && !dense.det()?.is_zero();
    let mut checks = BTreeMap::new();
    if options.check {
        let axa = dense.matmul(&pinv)?.matmul(&dense)?;
        checks.insert("g_inverse".into(), axa == dense);
        if invertible {
            let id = ExactMatrix::identity(dense.rows());
            checks.insert("left_inverse".into(), pinv.matmul(&dense)? == id);
            checks.insert("right_inverse".into(), dense.matmul(&pinv)? == id);
        }
    }

    Ok(TphResult {
        pinv,
        sign,
        table: Some(table),
        diagnostics: Diagnostics {
            det_const: Some(conf.det_const.clone()),
            invertible,
            used_transpose_fallback: false,
            zero_input: false,
            checks,
        },
    })
}
