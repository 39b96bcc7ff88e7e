//! Cyclic Jacobi eigensolver for hermitian matrices.

use std::cmp::Ordering;

use super::basis::normalize_phase;
use super::matrix::{Matrix, C64, ZERO};
use super::types::{HermitianMatrix, UnitaryMatrix};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvectors (columns) and eigenvalues in non-increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianEigen {
    pub vectors: UnitaryMatrix,
    pub values: Vec<f64>,
}

impl HermitianEigen {
    pub fn min(&self) -> f64 {
        *self.values.last().expect("non-empty spectrum")
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    /// `U · diag(values) · U*`.
    pub fn reconstruct(&self) -> Matrix {
        let u = self.vectors.as_matrix();
        let scaled = Matrix::from_fn(u.rows(), u.cols(), |i, j| u[(i, j)] * self.values[j]);
        &scaled * &u.adjoint()
    }

    /// `f(H) = U · diag(f(λ)) · U*`.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> HermitianMatrix {
        let u = self.vectors.as_matrix();
        let fv: Vec<f64> = self.values.iter().map(|&x| f(x)).collect();
        let scaled = Matrix::from_fn(u.rows(), u.cols(), |i, j| u[(i, j)] * fv[j]);
        HermitianMatrix::symmetrize(&(&scaled * &u.adjoint()))
    }
}

/// Unitary 2×2 `J = [[c, s], [-s·φ, c·φ]]` diagonalizing the hermitian block
/// `[[a, g], [conj(g), b]]` by `J* M J`. Returns `(c, s, φ, t)`; the new diagonal
/// is `(a − t|g|, b + t|g|)`.
pub(crate) fn jacobi_rotation(a: f64, b: f64, g: C64) -> (f64, f64, C64, f64) {
    let mag = g.norm();
    let phase = g.conj() / mag;
    let theta = (b - a) / (2.0 * mag);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let t = 1.0 / (theta.abs() + (theta * theta + 1.0).sqrt());
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    (c, s, phase, t)
}

/// Applies `M ← M J` on columns `p, q` of a row-major `rows × n` buffer.
pub(crate) fn rotate_columns(
    m: &mut [C64],
    n: usize,
    p: usize,
    q: usize,
    c: f64,
    s: f64,
    phase: C64,
) {
    let rows = m.len() / n;
    for r in 0..rows {
        let x = m[r * n + p];
        let y = m[r * n + q];
        m[r * n + p] = x * c - y * phase * s;
        m[r * n + q] = x * s + y * phase * c;
    }
}

/// Applies `M ← J* M` on rows `p, q` of a row-major `n × n` buffer.
fn rotate_rows(m: &mut [C64], n: usize, p: usize, q: usize, c: f64, s: f64, phase: C64) {
    let pc = phase.conj();
    for col in 0..n {
        let x = m[p * n + col];
        let y = m[q * n + col];
        m[p * n + col] = x * c - y * pc * s;
        m[q * n + col] = x * s + y * pc * c;
    }
}

/// Eigendecomposition of a hermitian matrix.
///
/// Eigenvalues come out sorted non-increasing. Each eigenvector is phase-normalized
/// (first non-negligible entry real positive) and exact eigenvalue ties are broken
/// by lexicographic order of the normalized vectors, so the output is a pure
/// function of the input bits.
pub fn eig_hermitian(h: &HermitianMatrix) -> Result<HermitianEigen> {
    let n = h.dim();
    let norm = h.frobenius_norm();
    let mut a: Vec<C64> = h.data().to_vec();
    let mut v: Vec<C64> = Matrix::identity(n).into_data();

    if norm > 0.0 && n > 1 {
        let skip = 1e-18 * norm;
        let mut converged = false;
        for _ in 0..MAX_SWEEPS {
            let mut rotated = false;
            for p in 0..n - 1 {
                for q in p + 1..n {
                    let g = a[p * n + q];
                    if g.norm() <= skip {
                        continue;
                    }
                    rotated = true;
                    let (app, aqq) = (a[p * n + p].re, a[q * n + q].re);
                    let (c, s, phase, t) = jacobi_rotation(app, aqq, g);
                    rotate_columns(&mut a, n, p, q, c, s, phase);
                    rotate_rows(&mut a, n, p, q, c, s, phase);
                    rotate_columns(&mut v, n, p, q, c, s, phase);
                    a[p * n + p] = C64::new(app - t * g.norm(), 0.0);
                    a[q * n + q] = C64::new(aqq + t * g.norm(), 0.0);
                    a[p * n + q] = ZERO;
                    a[q * n + p] = ZERO;
                }
            }
            if !rotated {
                converged = true;
                break;
            }
        }
        if !converged {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a[i * n + j].norm_sqr())
                .sum::<f64>()
                .sqrt();
            return Err(Error::NonConvergence {
                what: "hermitian Jacobi eigensolver",
                iterations: MAX_SWEEPS,
                residual: off / norm,
            });
        }
    }

    let vm = Matrix::from_vec(n, n, v).map_err(|_| Error::NonConvergence {
        what: "hermitian Jacobi eigensolver",
        iterations: MAX_SWEEPS,
        residual: f64::NAN,
    })?;
    let mut pairs: Vec<(f64, Vec<C64>)> = (0..n)
        .map(|j| {
            let mut col = vm.column(j);
            normalize_phase(&mut col);
            (a[j * n + j].re, col)
        })
        .collect();
    pairs.sort_by(|x, y| match y.0.total_cmp(&x.0) {
        Ordering::Equal => lex_cmp(&x.1, &y.1),
        o => o,
    });
    let values = pairs.iter().map(|p| p.0).collect();
    let cols: Vec<Vec<C64>> = pairs.into_iter().map(|p| p.1).collect();
    Ok(HermitianEigen {
        vectors: UnitaryMatrix::new_unchecked(Matrix::from_columns(n, &cols)),
        values,
    })
}

fn lex_cmp(u: &[C64], v: &[C64]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        match a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Eigenvalues only, non-increasing.
pub fn eigvals_hermitian(h: &HermitianMatrix) -> Result<Vec<f64>> {
    Ok(eig_hermitian(h)?.values)
}
