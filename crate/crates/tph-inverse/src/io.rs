//! File formats: UTF-8 JSON with every rational carried as a string in
//! canonical form, so exactness survives any tool boundary.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::assembly::TphResult;
use crate::error::{Error, Result};
use crate::indices::IndexTable;
use crate::matrix::ExactMatrix;
use crate::problem::TphProblem;
use crate::rational::{format_rational, parse_rational};

/// On-disk form of a problem: block sizes and the two coefficient block lists,
/// `a` ordered `j = -m..n` and `b` ordered `j = 0..n+m`, each entry a rational
/// string such as `"-3"` or `"5/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemFile {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    pub m: usize,
    pub a: Vec<Vec<Vec<String>>>,
    pub b: Vec<Vec<Vec<String>>>,
}

/// On-disk form of a dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

/// A distinct index with its multiplicity, as reported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctEntry {
    pub lambda: i64,
    pub nu: usize,
}

/// On-disk form of an analysis or inversion result. `pinv` and `sign` are
/// absent for pure analysis runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultFile {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pinv: Option<Vec<Vec<String>>>,
    pub indices: Vec<i64>,
    pub alpha: usize,
    pub omega: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct: Option<Vec<DistinctEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invertible: Option<bool>,
    #[serde(default, skip_serializing_if = "std::collections::BTreeMap::is_empty")]
    pub checks: std::collections::BTreeMap<String, bool>,
}

fn grid_to_strings(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_rational(m.get(i, j))).collect())
        .collect()
}

fn grid_from_strings(rows: usize, cols: usize, grid: &[Vec<String>]) -> Result<ExactMatrix> {
    if grid.len() != rows || grid.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse(format!(
            "grid does not match the declared {rows}x{cols} shape"
        )));
    }
    let mut parsed = Vec::with_capacity(rows);
    for row in grid {
        let mut out = Vec::with_capacity(cols);
        for cell in row {
            out.push(parse_rational(cell)?);
        }
        parsed.push(out);
    }
    ExactMatrix::from_rows(parsed)
}

impl ProblemFile {
    pub fn from_problem(prob: &TphProblem) -> Self {
        let (n, m) = (prob.n() as i64, prob.m() as i64);
        ProblemFile {
            p: prob.p(),
            q: prob.q(),
            n: prob.n(),
            m: prob.m(),
            a: (-m..=n).map(|j| grid_to_strings(prob.a(j))).collect(),
            b: (0..=n + m).map(|j| grid_to_strings(prob.b(j))).collect(),
        }
    }

    pub fn to_problem(&self) -> Result<TphProblem> {
        let blocks = |list: &[Vec<Vec<String>>]| -> Result<Vec<ExactMatrix>> {
            list.iter()
                .map(|g| grid_from_strings(self.p, self.q, g))
                .collect()
        };
        TphProblem::new(self.p, self.q, self.n, self.m, blocks(&self.a)?, blocks(&self.b)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self)?)?;
        Ok(())
    }
}

impl MatrixFile {
    pub fn from_matrix(m: &ExactMatrix) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            entries: grid_to_strings(m),
        }
    }

    pub fn to_matrix(&self) -> Result<ExactMatrix> {
        grid_from_strings(self.rows, self.cols, &self.entries)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self)?)?;
        Ok(())
    }
}

impl ResultFile {
    /// Analysis-only report: the staircase and the indices, no inverse.
    pub fn from_table(table: &IndexTable) -> Self {
        ResultFile {
            status: "ok".into(),
            sign: None,
            pinv: None,
            indices: table.mu.clone(),
            alpha: table.alpha,
            omega: table.omega,
            d: Some(table.d.clone()),
            delta: Some(table.delta.clone()),
            distinct: Some(
                table
                    .distinct
                    .iter()
                    .map(|di| DistinctEntry {
                        lambda: di.lambda,
                        nu: di.nu,
                    })
                    .collect(),
            ),
            invertible: None,
            checks: Default::default(),
        }
    }

    /// Full inversion report.
    pub fn from_result(result: &TphResult) -> Self {
        let mut out = match &result.table {
            Some(table) => Self::from_table(table),
            None => ResultFile {
                status: "ok".into(),
                sign: None,
                pinv: None,
                indices: Vec::new(),
                alpha: 0,
                omega: 0,
                d: None,
                delta: None,
                distinct: None,
                invertible: None,
                checks: Default::default(),
            },
        };
        out.sign = Some(result.sign.as_str().into());
        out.pinv = Some(grid_to_strings(&result.pinv));
        out.invertible = Some(result.diagnostics.invertible);
        out.checks = result.diagnostics.checks.clone();
        if !result.checks_passed() {
            out.status = "check-failed".into();
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata;

    #[test]
    fn problem_file_roundtrip() {
        let prob = testdata::worked_problem();
        let file = ProblemFile::from_problem(&prob);
        let back = file.to_problem().unwrap();
        assert_eq!(back, prob);
        // parse -> serialize -> parse is the identity
        let json = serde_json::to_string(&file).unwrap();
        let reparsed: ProblemFile = serde_json::from_str(&json).unwrap();
        assert_eq!(reparsed, file);
    }

    #[test]
    fn matrix_file_roundtrip_canonicalizes() {
        let raw = MatrixFile {
            rows: 1,
            cols: 2,
            entries: vec![vec!["2/4".into(), "-6/3".into()]],
        };
        let m = raw.to_matrix().unwrap();
        let canonical = MatrixFile::from_matrix(&m);
        assert_eq!(canonical.entries, vec![vec!["1/2".to_string(), "-2".to_string()]]);
        assert_eq!(canonical.to_matrix().unwrap(), m);
    }

    #[test]
    fn zero_denominator_fails_to_parse() {
        let raw = MatrixFile {
            rows: 1,
            cols: 1,
            entries: vec![vec!["1/0".into()]],
        };
        assert!(matches!(raw.to_matrix(), Err(Error::Parse(_))));
    }

    #[test]
    fn shape_header_is_enforced() {
        let raw = MatrixFile {
            rows: 2,
            cols: 2,
            entries: vec![vec!["1".into(), "2".into()]],
        };
        assert!(raw.to_matrix().is_err());
        let file = ProblemFile {
            p: 1,
            q: 1,
            n: 1,
            m: 0,
            a: vec![vec![vec!["1".into()]]],
            b: vec![vec![vec!["1".into()]], vec![vec!["2".into()]]],
        };
        assert!(file.to_problem().is_err());
    }

    #[test]
    fn result_file_roundtrip() {
        use crate::assembly::{pinv_tph, PinvOptions};
        use crate::problem::Sign;
        let options = PinvOptions {
            check: true,
            ..PinvOptions::default()
        };
        let result = pinv_tph(&testdata::worked_problem(), Sign::Plus, &options).unwrap();
        let file = ResultFile::from_result(&result);
        assert_eq!(file.indices, vec![-1, 0, 0, 1]);
        assert_eq!(file.pinv.as_ref().unwrap()[0][0], "1/4");
        assert_eq!(file.pinv.as_ref().unwrap()[0][1], "1/2");
        assert_eq!(file.invertible, Some(true));
        let json = file.to_json().unwrap();
        let reparsed: ResultFile = serde_json::from_str(&json).unwrap();
        assert_eq!(reparsed, file);
    }
}
