//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes are incompatible.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// `k` lies outside the valid range of the Toeplitz family.
    #[error("family index {k} outside [{lo}, {hi}]")]
    FamilyIndexOutOfRange { k: i64, lo: i64, hi: i64 },

    /// A Laurent operand carries powers outside the admissible window.
    #[error("power range violation: operand spans [{have_lo}, {have_hi}], admissible [{lo}, {hi}]")]
    PowerRange {
        have_lo: i64,
        have_hi: i64,
        lo: i64,
        hi: i64,
    },

    /// Index analysis is undefined for the all-zero sequence.
    #[error("zero sequence: the all-zero sequence has no index table")]
    ZeroSequence,

    /// The right defect is positive and the complement construction is not available.
    #[error("right defect omega = {omega} > 0 is unsupported")]
    DefectUnsupported { omega: usize },

    /// The stacked polynomial matrix has a zero or non-constant determinant.
    #[error("matrix polynomial is not unimodular: {0}")]
    NotUnimodular(String),

    /// A claimed essential column has a nonzero coefficient in the forbidden band.
    #[error("essentiality violation in column {col}: coefficient at power {power} is nonzero")]
    EssentialityViolation { col: usize, power: i64 },

    /// Dense inversion of a singular square matrix.
    #[error("matrix is singular")]
    Singular,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    /// A structural identity that should hold by construction failed; a bug, not bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
