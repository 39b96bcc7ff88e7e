//! Singular value and polar decompositions of square matrices (one-sided Jacobi).

use super::basis::{complete_orthonormal, dot, norm};
use super::eigen::{jacobi_rotation, rotate_columns};
use super::matrix::{Matrix, C64};
use super::types::{HermitianMatrix, UnitaryMatrix};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// `A = left · diag(sigmas) · right*`, sigmas non-increasing and non-negative.
#[derive(Debug, Clone, PartialEq)]
pub struct Svd {
    pub left: UnitaryMatrix,
    pub sigmas: Vec<f64>,
    pub right: UnitaryMatrix,
}

impl Svd {
    pub fn reconstruct(&self) -> Matrix {
        let u = self.left.as_matrix();
        let us = Matrix::from_fn(u.rows(), u.cols(), |i, j| u[(i, j)] * self.sigmas[j]);
        &us * &self.right.adjoint()
    }
}

pub fn svd(a: &Matrix) -> Result<Svd> {
    let n = a.dim()?;
    let mut g: Vec<C64> = a.data().to_vec();
    let mut v: Vec<C64> = Matrix::identity(n).into_data();

    let column = |g: &[C64], j: usize| -> Vec<C64> { (0..n).map(|i| g[i * n + j]).collect() };

    let mut converged = n == 1;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let gp = column(&g, p);
                let gq = column(&g, q);
                let alpha = dot(&gp, &gp).re;
                let beta = dot(&gq, &gq).re;
                let gamma = dot(&gp, &gq);
                if alpha == 0.0 || beta == 0.0 {
                    continue;
                }
                if gamma.norm() <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let (c, s, phase, _) = jacobi_rotation(alpha, beta, gamma);
                rotate_columns(&mut g, n, p, q, c, s, phase);
                rotate_columns(&mut v, n, p, q, c, s, phase);
            }
        }
        if !rotated {
            converged = true;
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            what: "one-sided Jacobi SVD",
            iterations: MAX_SWEEPS,
            residual: f64::NAN,
        });
    }

    let mut order: Vec<(f64, usize)> = (0..n).map(|j| (norm(&column(&g, j)), j)).collect();
    order.sort_by(|x, y| y.0.total_cmp(&x.0).then(x.1.cmp(&y.1)));
    let smax = order[0].0;
    let cutoff = (n as f64) * f64::EPSILON * smax;

    let mut sigmas = Vec::with_capacity(n);
    let mut left: Vec<Vec<C64>> = Vec::with_capacity(n);
    let mut right: Vec<Vec<C64>> = Vec::with_capacity(n);
    for &(s, j) in &order {
        right.push(column(&v, j));
        if s > cutoff && s > 0.0 {
            left.push(column(&g, j).into_iter().map(|z| z / s).collect());
            sigmas.push(s);
        } else {
            sigmas.push(0.0);
        }
    }
    let left = complete_orthonormal(&left, n);
    Ok(Svd {
        left: UnitaryMatrix::new_unchecked(Matrix::from_columns(n, &left)),
        sigmas,
        right: UnitaryMatrix::new_unchecked(Matrix::from_columns(n, &right)),
    })
}

pub fn singular_values(a: &Matrix) -> Result<Vec<f64>> {
    Ok(svd(a)?.sigmas)
}

/// Largest singular value.
pub fn spectral_norm(a: &Matrix) -> Result<f64> {
    Ok(svd(a)?.sigmas[0])
}

/// `X = U·P` with `U` unitary and `P = |X|` positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct Polar {
    pub unitary: UnitaryMatrix,
    pub positive: HermitianMatrix,
}

/// Polar decomposition through the SVD `X = W1 Σ W2*`: `U = W1 W2*`, `P = W2 Σ W2*`.
/// For singular `X` the partial isometry is extended to a full unitary by the SVD
/// completion of `W1`.
pub fn unitary_polar_factor(x: &Matrix) -> Result<Polar> {
    let d = svd(x)?;
    let w2 = d.right.as_matrix();
    let u = d.left.as_matrix() * &w2.adjoint();
    let ws = Matrix::from_fn(w2.rows(), w2.cols(), |i, j| w2[(i, j)] * d.sigmas[j]);
    let p = &ws * &w2.adjoint();
    Ok(Polar {
        unitary: UnitaryMatrix::new_unchecked(u),
        positive: HermitianMatrix::symmetrize(&p),
    })
}
