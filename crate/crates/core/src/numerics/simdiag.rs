use super::eigen::eig_hermitian;
use super::matrix::Matrix;
use super::types::{HermitianMatrix, UnitaryMatrix};
use crate::error::{Error, Result};
use crate::tolerance::TolerancePolicy;

/// Common eigenbasis of a commuting hermitian family.
///
/// `values[j][k]` is the eigenvalue of operator `j` on basis column `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDiagonalization {
    pub basis: UnitaryMatrix,
    pub values: Vec<Vec<f64>>,
}

impl JointDiagonalization {
    /// Joint eigenvalue tuple of basis column `k`.
    pub fn tuple(&self, k: usize) -> Vec<f64> {
        self.values.iter().map(|row| row[k]).collect()
    }

    /// `‖A_j − U·diag(row j)·U*‖_F`.
    pub fn residual(&self, j: usize, a: &Matrix) -> f64 {
        let u = self.basis.as_matrix();
        let row = &self.values[j];
        let scaled = Matrix::from_fn(u.rows(), u.cols(), |r, c| u[(r, c)] * row[c]);
        (&scaled * &u.adjoint())
            .distance(a)
            .expect("same dimension")
    }
}

/// Largest scaled commutator `‖[A_i, A_j]‖ / max(1, ‖A_i‖‖A_j‖)` over all pairs,
/// with the pair attaining it.
pub fn worst_commutator(family: &[HermitianMatrix]) -> Result<(f64, usize, usize)> {
    let mut worst = (0.0, 0, 0);
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            let c = family[i].commutator(&family[j])?.frobenius_norm();
            let scale = (family[i].frobenius_norm() * family[j].frobenius_norm()).max(1.0);
            let r = c / scale;
            if r > worst.0 {
                worst = (r, i, j);
            }
        }
    }
    Ok(worst)
}

/// Deterministic simultaneous diagonalization by sequential eigenspace refinement.
///
/// The first operator is diagonalized; each later operator is then diagonalized
/// inside every eigenvalue cluster accumulated so far, splitting clusters by its
/// own eigenvalues. Clusters group consecutive eigenvalues whose gap is at most
/// `eig_residual · max(1, ‖A‖)`.
pub fn simultaneous_diagonalize(
    family: &[HermitianMatrix],
    tol: &TolerancePolicy,
) -> Result<JointDiagonalization> {
    let first = family
        .first()
        .ok_or_else(|| Error::Precondition("cannot diagonalize an empty family".into()))?;
    let n = first.dim();
    if let Some(bad) = family.iter().find(|a| a.dim() != n) {
        return Err(Error::DimensionMismatch(format!(
            "family mixes dimensions {n} and {}",
            bad.dim()
        )));
    }
    let (worst, i, j) = worst_commutator(family)?;
    if worst > tol.rel_eq {
        return Err(Error::CommutationFailure { i, j, norm: worst });
    }

    let e0 = eig_hermitian(first)?;
    let mut u = e0.vectors.into_matrix();
    let mut clusters = split_clusters(&e0.values, 0, tol.eig_threshold(first.frobenius_norm()));

    for a in &family[1..] {
        let gap = tol.eig_threshold(a.frobenius_norm());
        let mut refined = Vec::with_capacity(clusters.len());
        for (start, len) in clusters {
            if len == 1 {
                refined.push((start, 1));
                continue;
            }
            let uc = u.block(0, start, n, len);
            let c = HermitianMatrix::symmetrize(&(&(&uc.adjoint() * a.as_matrix()) * &uc));
            let ec = eig_hermitian(&c)?;
            let rotated = &uc * ec.vectors.as_matrix();
            u.set_block(0, start, &rotated);
            refined.extend(split_clusters(&ec.values, start, gap));
        }
        clusters = refined;
    }

    let values = family
        .iter()
        .map(|a| {
            let au = a.as_matrix() * &u;
            (0..n)
                .map(|k| {
                    (0..n)
                        .map(|r| u[(r, k)].conj() * au[(r, k)])
                        .sum::<num_complex::Complex64>()
                        .re
                })
                .collect()
        })
        .collect();
    Ok(JointDiagonalization {
        basis: UnitaryMatrix::new_unchecked(u),
        values,
    })
}

/// Groups sorted values into runs of consecutive entries separated by at most `gap`.
fn split_clusters(values: &[f64], offset: usize, gap: f64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for k in 1..=values.len() {
        if k == values.len() || (values[k - 1] - values[k]).abs() > gap {
            out.push((offset + start, k - start));
            start = k;
        }
    }
    out
}
