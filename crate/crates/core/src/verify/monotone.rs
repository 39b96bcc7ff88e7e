use std::fmt;

use super::report::VerificationReport;
use crate::error::Error;
use crate::numerics::simdiag::worst_commutator;
use crate::numerics::{simultaneous_diagonalize, HermitianMatrix, Matrix, UnitaryMatrix};
use crate::tolerance::TolerancePolicy;

/// Common orthonormal eigenbasis along which every member's eigenvalues are
/// non-increasing.
///
/// Column `k` of `basis` is `e_k`; `values[j][k]` is the eigenvalue of member `j`
/// on `e_k`. `order[k]` is the column of the raw joint diagonalization that was
/// moved to position `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneCertificate {
    pub basis: UnitaryMatrix,
    pub values: Vec<Vec<f64>>,
    pub order: Vec<usize>,
}

impl MonotoneCertificate {
    /// Re-checks the certificate against `family` without re-diagonalizing.
    pub fn validate(
        &self,
        family: &[HermitianMatrix],
        tol: &TolerancePolicy,
    ) -> VerificationReport {
        let mut report = VerificationReport::new();
        if family.len() != self.values.len() {
            report.push_flag("member count", false);
            return report;
        }
        let u = self.basis.as_matrix();
        for (j, (a, row)) in family.iter().zip(&self.values).enumerate() {
            if a.dim() != u.rows() || row.len() != u.cols() {
                report.push_flag(format!("dimension[{j}]"), false);
                continue;
            }
            let scaled = Matrix::from_fn(u.rows(), u.cols(), |r, c| u[(r, c)] * row[c]);
            let recon = &scaled * &u.adjoint();
            let residual = recon.distance(a).unwrap_or(f64::INFINITY);
            report.push(
                format!("eigenbasis[{j}]"),
                residual,
                tol.eq_threshold(a.frobenius_norm()),
            );
        }
        let increase = self
            .values
            .iter()
            .flat_map(|row| row.windows(2).map(|w| w[1] - w[0]))
            .fold(0.0, f64::max);
        report.push(
            "rows non-increasing",
            increase,
            self.values.len() as f64 * chain_tolerance(family, tol),
        );
        report
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

/// Why a family is not monotone.
#[derive(Debug, Clone, PartialEq)]
pub enum MonotoneFailure {
    NonCommuting {
        i: usize,
        j: usize,
        norm: f64,
    },
    /// Two joint eigenvalue tuples, adjacent in coordinate-sum order, that are
    /// not componentwise comparable.
    Incomparable {
        first: Vec<f64>,
        second: Vec<f64>,
    },
    Numerical(Error),
}

impl fmt::Display for MonotoneFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonotoneFailure::NonCommuting { i, j, norm } => write!(
                f,
                "members {i} and {j} do not commute (scaled commutator {norm:.3e})"
            ),
            MonotoneFailure::Incomparable { first, second } => write!(
                f,
                "joint eigenvalue tuples {first:?} and {second:?} are incomparable"
            ),
            MonotoneFailure::Numerical(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for MonotoneFailure {}

fn chain_tolerance(family: &[HermitianMatrix], tol: &TolerancePolicy) -> f64 {
    let scale = family
        .iter()
        .map(|a| a.frobenius_norm())
        .fold(0.0, f64::max);
    tol.eq_threshold(scale)
}

/// `u ≥ v` or `v ≥ u` componentwise, up to `slack`.
pub fn comparable(u: &[f64], v: &[f64], slack: f64) -> bool {
    let diffs = u.iter().zip(v).map(|(a, b)| a - b);
    let (lo, hi) = diffs.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), d| {
        (lo.min(d), hi.max(d))
    });
    lo >= -slack || hi <= slack
}

/// Decides whether `family` is monotone and returns the certificate when it is.
///
/// The joint eigenvalue tuples are sorted by coordinate sum (largest first). A
/// chain exists iff that order is itself a chain, because `u ≥ v` componentwise
/// forces `sum(u) ≥ sum(v)`; so it suffices to compare neighbours.
pub fn is_monotone_family(
    family: &[HermitianMatrix],
    tol: &TolerancePolicy,
) -> Result<MonotoneCertificate, MonotoneFailure> {
    if family.is_empty() {
        return Err(MonotoneFailure::Numerical(Error::Precondition(
            "empty family".into(),
        )));
    }
    let (worst, i, j) = worst_commutator(family).map_err(MonotoneFailure::Numerical)?;
    if worst > tol.rel_eq {
        return Err(MonotoneFailure::NonCommuting { i, j, norm: worst });
    }
    let joint = simultaneous_diagonalize(family, tol).map_err(|e| match e {
        Error::CommutationFailure { i, j, norm } => MonotoneFailure::NonCommuting { i, j, norm },
        other => MonotoneFailure::Numerical(other),
    })?;

    let n = joint.basis.dim();
    let tuples: Vec<Vec<f64>> = (0..n).map(|k| joint.tuple(k)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    let sum = |k: usize| tuples[k].iter().sum::<f64>();
    order.sort_by(|&a, &b| sum(b).total_cmp(&sum(a)).then(a.cmp(&b)));

    let slack = chain_tolerance(family, tol);
    for w in order.windows(2) {
        if !comparable(&tuples[w[0]], &tuples[w[1]], slack) {
            return Err(MonotoneFailure::Incomparable {
                first: tuples[w[0]].clone(),
                second: tuples[w[1]].clone(),
            });
        }
    }

    let u = joint.basis.as_matrix();
    let basis = Matrix::from_fn(n, n, |r, c| u[(r, order[c])]);
    let values = joint
        .values
        .iter()
        .map(|row| order.iter().map(|&k| row[k]).collect())
        .collect();
    Ok(MonotoneCertificate {
        basis: UnitaryMatrix::new_unchecked(basis),
        values,
        order,
    })
}

/// Report form of [`is_monotone_family`]: commutation, chain and certificate checks.
pub fn monotone_report(family: &[HermitianMatrix], tol: &TolerancePolicy) -> VerificationReport {
    let mut report = VerificationReport::new();
    match worst_commutator(family) {
        Ok((worst, _, _)) => {
            report.push("commutators", worst, tol.rel_eq);
        }
        Err(_) => {
            report.push_flag("dimensions agree", false);
            return report;
        }
    }
    match is_monotone_family(family, tol) {
        Ok(cert) => {
            report.push_flag("chain", true);
            report.merge("certificate.", cert.validate(family, tol));
        }
        Err(MonotoneFailure::NonCommuting { .. }) => {}
        Err(_) => {
            report.push_flag("chain", false);
        }
    }
    report
}

/// `(A, B)` is antimonotone iff `(A, −B)` is monotone.
pub fn is_antimonotone_pair(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    tol: &TolerancePolicy,
) -> VerificationReport {
    let neg_b = HermitianMatrix::symmetrize(&-b.as_matrix());
    let mut report = monotone_report(&[a.clone(), neg_b], tol);
    report.checks.iter_mut().for_each(|c| {
        if c.name == "chain" {
            c.name = "reversed chain".into();
        }
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> TolerancePolicy {
        TolerancePolicy::default()
    }

    #[test]
    fn diagonal_monotone_pair() {
        let fam = [
            HermitianMatrix::diag(&[2.0, 1.0]),
            HermitianMatrix::diag(&[5.0, 3.0]),
        ];
        let c = is_monotone_family(&fam, &tol()).unwrap();
        assert_eq!(c.values, vec![vec![2.0, 1.0], vec![5.0, 3.0]]);
        assert!(c.validate(&fam, &tol()).passed);
    }

    #[test]
    fn antimonotone_pair_is_not_monotone() {
        let fam = [
            HermitianMatrix::diag(&[2.0, 1.0]),
            HermitianMatrix::diag(&[3.0, 5.0]),
        ];
        match is_monotone_family(&fam, &tol()) {
            Err(MonotoneFailure::Incomparable { first, second }) => {
                // sums 6 and 5: (1,5) then (2,3)
                assert_eq!(first, vec![1.0, 5.0]);
                assert_eq!(second, vec![2.0, 3.0]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(is_antimonotone_pair(&fam[0], &fam[1], &tol()).passed);
    }

    #[test]
    fn antimonotone_examples() {
        let a = HermitianMatrix::diag(&[3.0, 1.0, 2.0]);
        assert!(!is_antimonotone_pair(&a, &a, &tol()).passed);
        let c = HermitianMatrix::diag(&[4.0, 4.0, 4.0]);
        assert!(is_antimonotone_pair(&a, &c, &tol()).passed);
    }

    #[test]
    fn disjoint_projections_rejected() {
        let fam = [
            HermitianMatrix::diag(&[1.0, 0.0]),
            HermitianMatrix::diag(&[0.0, 1.0]),
        ];
        assert!(matches!(
            is_monotone_family(&fam, &tol()),
            Err(MonotoneFailure::Incomparable { .. })
        ));
        let r = monotone_report(&fam, &tol());
        assert!(!r.passed);
        assert_eq!(r.worst.as_deref(), Some("chain"));
    }

    #[test]
    fn non_commuting_reported() {
        let a = HermitianMatrix::diag(&[1.0, 0.0]);
        let b = HermitianMatrix::symmetrize(&Matrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]));
        assert!(matches!(
            is_monotone_family(&[a.clone(), b.clone()], &tol()),
            Err(MonotoneFailure::NonCommuting { .. })
        ));
        let r = monotone_report(&[a, b], &tol());
        assert_eq!(r.worst.as_deref(), Some("commutators"));
    }

    #[test]
    fn comparable_with_slack() {
        assert!(comparable(&[1.0, 2.0], &[1.0 + 1e-12, 1.0], 1e-9));
        assert!(!comparable(&[1.0, 2.0], &[2.0, 1.0], 1e-9));
    }
}
