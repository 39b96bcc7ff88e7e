//! Matrix files: `{"rows", "cols", "data": [[re, im], …], "kind"?}`, row-major.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use totdil_core::verify::{check_class, OperatorClass, VerificationReport};
use totdil_core::{Matrix, TolerancePolicy, C64};

use crate::failure::{CmdResult, Failure};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
}

/// Kind tags understood on load; anything else is rejected.
const ISOMETRY: &str = "isometry";

impl MatrixFile {
    pub fn from_matrix(m: &Matrix, kind: Option<&str>) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            data: m.data().iter().map(|z| [z.re, z.im]).collect(),
            kind: kind.map(str::to_owned),
        }
    }

    pub fn to_matrix(&self) -> CmdResult<Matrix> {
        let data = self.data.iter().map(|&[re, im]| C64::new(re, im)).collect();
        Matrix::from_vec(self.rows, self.cols, data).map_err(|e| Failure::Parse(e.to_string()))
    }
}

/// Checks a loaded matrix against its kind tag.
fn kind_report(m: &Matrix, kind: &str, tol: &TolerancePolicy) -> CmdResult<VerificationReport> {
    if kind == ISOMETRY {
        let gram = &m.adjoint() * m;
        let defect = gram
            .distance(&Matrix::identity(m.cols()))
            .map_err(Failure::from)?;
        let mut r = VerificationReport::new();
        r.push(
            "isometry",
            defect,
            tol.eq_threshold((m.cols() as f64).sqrt()),
        );
        return Ok(r);
    }
    let class: OperatorClass = kind
        .parse()
        .map_err(|_| Failure::Parse(format!("unknown kind tag '{kind}'")))?;
    Ok(check_class(m, class, tol))
}

/// Reads a matrix file; a kind tag that the data does not satisfy is a
/// verification failure.
pub fn read_matrix(path: &Path, tol: &TolerancePolicy) -> CmdResult<Matrix> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    let file: MatrixFile = serde_json::from_str(&text).map_err(|e| Failure::io(path, e))?;
    let m = file
        .to_matrix()
        .map_err(|f| f.context(&path.display().to_string()))?;
    if let Some(kind) = &file.kind {
        let report = kind_report(&m, kind, tol)?;
        if !report.passed {
            return Err(Failure::Verification(format!(
                "{} is tagged '{kind}' but fails check '{}'",
                path.display(),
                report.worst.unwrap_or_default()
            )));
        }
    }
    Ok(m)
}

pub fn read_all(paths: &[PathBuf], tol: &TolerancePolicy) -> CmdResult<Vec<Matrix>> {
    paths.iter().map(|p| read_matrix(p, tol)).collect()
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> CmdResult {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::io(path, e))?;
    text.push('\n');
    fs::write(path, text).map_err(|e| Failure::io(path, e))
}

pub fn write_matrix(path: &Path, m: &Matrix, kind: Option<&str>) -> CmdResult {
    if !m.is_finite() {
        return Err(Failure::Verification(format!(
            "refusing to write non-finite matrix to {}",
            path.display()
        )));
    }
    write_json(path, &MatrixFile::from_matrix(m, kind))
}

pub fn ensure_dir(dir: &Path) -> CmdResult {
    fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))
}
