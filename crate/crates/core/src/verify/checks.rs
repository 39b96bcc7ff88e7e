use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::report::VerificationReport;
use crate::error::{Error, Result};
use crate::numerics::{eig_hermitian, spectral_norm, HermitianMatrix, Matrix};
use crate::tolerance::TolerancePolicy;

/// Checks that every diagonal block of `b` (viewed on `⊕^k H`) equals `a`.
pub fn is_total_dilation(
    b: &Matrix,
    a: &Matrix,
    k: usize,
    tol: &TolerancePolicy,
) -> Result<VerificationReport> {
    let d = a.dim()?;
    let n = b.dim()?;
    if k == 0 || n != k * d {
        return Err(Error::DimensionMismatch(format!(
            "a {n}x{n} matrix cannot hold {k} diagonal blocks of size {d}"
        )));
    }
    let threshold = tol.eq_threshold(a.frobenius_norm());
    let mut report = VerificationReport::new();
    for s in 0..k {
        let block = b.block(s * d, s * d, d, d);
        report.push(format!("block[{s}]"), block.distance(a)?, threshold);
    }
    Ok(report)
}

/// Operator classes for [`check_class`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorClass {
    Hermitian,
    Positive,
    StrictlyPositive,
    Normal,
    Unitary,
    Contraction,
    AntisymmetricReal,
}

impl OperatorClass {
    pub const ALL: [OperatorClass; 7] = [
        OperatorClass::Hermitian,
        OperatorClass::Positive,
        OperatorClass::StrictlyPositive,
        OperatorClass::Normal,
        OperatorClass::Unitary,
        OperatorClass::Contraction,
        OperatorClass::AntisymmetricReal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorClass::Hermitian => "hermitian",
            OperatorClass::Positive => "positive",
            OperatorClass::StrictlyPositive => "strictly-positive",
            OperatorClass::Normal => "normal",
            OperatorClass::Unitary => "unitary",
            OperatorClass::Contraction => "contraction",
            OperatorClass::AntisymmetricReal => "antisymmetric-real",
        }
    }
}

impl fmt::Display for OperatorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OperatorClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown operator class '{s}'")))
    }
}

/// Residual-based membership test.
///
/// Positivity checks report `−λ_min` as the residual; for strict positivity the
/// threshold is negative (`−psd_slack·max(1, ‖A‖)`), so the check passes only
/// when `λ_min` clears the slack.
pub fn check_class(a: &Matrix, kind: OperatorClass, tol: &TolerancePolicy) -> VerificationReport {
    let mut report = VerificationReport::new();
    let Ok(n) = a.dim() else {
        report.push_flag("square", false);
        return report;
    };
    let norm = a.frobenius_norm();
    let hermitian_defect = a.distance(&a.adjoint()).expect("square");
    let eq = tol.eq_threshold(norm);

    let min_eig = || -> f64 {
        eig_hermitian(&HermitianMatrix::symmetrize(a))
            .map(|e| e.min())
            .unwrap_or(f64::NAN)
    };

    match kind {
        OperatorClass::Hermitian => {
            report.push("hermitian", hermitian_defect, eq);
        }
        OperatorClass::Positive => {
            report.push("hermitian", hermitian_defect, eq);
            report.push("-min eigenvalue", -min_eig(), tol.psd_threshold(norm));
        }
        OperatorClass::StrictlyPositive => {
            report.push("hermitian", hermitian_defect, eq);
            report.push("-min eigenvalue", -min_eig(), -tol.psd_threshold(norm));
        }
        OperatorClass::Normal => {
            let aa = a * &a.adjoint();
            let a_a = &a.adjoint() * a;
            report.push(
                "normality",
                aa.distance(&a_a).expect("square"),
                tol.eq_threshold(norm * norm),
            );
        }
        OperatorClass::Unitary => {
            let gram = &a.adjoint() * a;
            report.push(
                "unitarity",
                gram.distance(&Matrix::identity(n)).expect("square"),
                tol.eq_threshold((n as f64).sqrt()),
            );
        }
        OperatorClass::Contraction => {
            let s = spectral_norm(a).unwrap_or(f64::NAN);
            report.push("spectral norm - 1", s - 1.0, tol.psd_slack);
        }
        OperatorClass::AntisymmetricReal => {
            report.push("imaginary part", a.max_imag(), eq);
            report.push("A + Aᵀ", (a + &a.transpose()).frobenius_norm(), eq);
        }
    }
    report
}

/// `‖B_i B_j‖ ≤ rel_eq · max(1, ‖B_i‖‖B_j‖)` for all `i ≠ j`.
pub fn check_mutual_annihilation(
    family: &[Matrix],
    tol: &TolerancePolicy,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    for i in 0..family.len() {
        for j in 0..family.len() {
            if i == j {
                continue;
            }
            let p = family[i].checked_mul(&family[j])?;
            let scale = family[i].frobenius_norm() * family[j].frobenius_norm();
            report.push(
                format!("B{i}·B{j}"),
                p.frobenius_norm(),
                tol.eq_threshold(scale),
            );
        }
    }
    Ok(report)
}
