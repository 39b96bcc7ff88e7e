use totdil_core::verify::{
    check_antimonotone_det_reversal, check_class, check_compression_inequalities,
    check_mutual_annihilation, is_antimonotone_pair, is_total_dilation, monotone_report,
    OperatorClass,
};
use totdil_core::{HermitianMatrix, Isometry, Matrix, TolerancePolicy, VerificationReport};

use crate::args::Check;
use crate::failure::{CmdResult, Failure};
use crate::io::{read_all, read_matrix};

/// Records how far each member is from hermitian, then symmetrizes it.
fn hermitian_members(
    family: &[Matrix],
    tol: &TolerancePolicy,
    report: &mut VerificationReport,
) -> CmdResult<Vec<HermitianMatrix>> {
    family
        .iter()
        .enumerate()
        .map(|(j, m)| {
            m.dim()?;
            report.push(
                format!("hermitian[{j}]"),
                m.distance(&m.adjoint())?,
                tol.eq_threshold(m.frobenius_norm()),
            );
            Ok(HermitianMatrix::symmetrize(m))
        })
        .collect()
}

pub fn run(check: &Check, tol: &TolerancePolicy) -> CmdResult<VerificationReport> {
    let mut report = VerificationReport::new();
    match check {
        Check::Total { k, base, dilation } => {
            let a = read_matrix(base, tol)?;
            let b = read_matrix(dilation, tol)?;
            report.merge("", is_total_dilation(&b, &a, *k, tol)?);
        }
        Check::Monotone { family } => {
            let ms = read_all(family, tol)?;
            let hs = hermitian_members(&ms, tol, &mut report)?;
            report.merge("", monotone_report(&hs, tol));
        }
        Check::Antimonotone { a, b } => {
            let ms = read_all(&[a.clone(), b.clone()], tol)?;
            let hs = hermitian_members(&ms, tol, &mut report)?;
            report.merge("", is_antimonotone_pair(&hs[0], &hs[1], tol));
        }
        Check::Class { kind, matrix } => {
            let class: OperatorClass = kind.parse().map_err(|_| {
                let names: Vec<_> = OperatorClass::ALL.iter().map(|c| c.name()).collect();
                Failure::Parse(format!(
                    "unknown class '{kind}' (expected one of {})",
                    names.join(", ")
                ))
            })?;
            report.merge("", check_class(&read_matrix(matrix, tol)?, class, tol));
        }
        Check::Inequalities {
            a,
            b,
            isometry,
            reversed,
        } => {
            let ms = read_all(&[a.clone(), b.clone()], tol)?;
            let hs = hermitian_members(&ms, tol, &mut report)?;
            let v = Isometry::new(read_matrix(isometry, tol)?, tol)?;
            let inner = if *reversed {
                check_antimonotone_det_reversal(&hs[0], &hs[1], &v, tol)?
            } else {
                check_compression_inequalities(&hs[0], &hs[1], &v, tol)?
            };
            report.merge("", inner);
        }
        Check::Annihilation { family } => {
            report.merge("", check_mutual_annihilation(&read_all(family, tol)?, tol)?);
        }
    }
    Ok(report)
}
