use std::ops::Deref;

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::tolerance::TolerancePolicy;

/// Square matrix equal to its adjoint (stored exactly symmetrized).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(Matrix);

impl HermitianMatrix {
    /// Accepts `m` when `‖M − M*‖ ≤ rel_eq·max(1, ‖M‖)` and stores `(M + M*)/2`.
    pub fn new(m: Matrix, tol: &TolerancePolicy) -> Result<Self> {
        m.dim()?;
        let asym = m.distance(&m.adjoint())?;
        let threshold = tol.eq_threshold(m.frobenius_norm());
        if asym > threshold {
            return Err(Error::Precondition(format!(
                "matrix is not hermitian: ‖M − M*‖ = {asym:.3e} exceeds {threshold:.3e}"
            )));
        }
        Ok(HermitianMatrix(m.hermitian_part()))
    }

    /// Hermitian part `(M + M*)/2` of a square matrix, without any check.
    pub fn symmetrize(m: &Matrix) -> Self {
        assert!(m.is_square(), "hermitian part needs a square matrix");
        HermitianMatrix(m.hermitian_part())
    }

    pub fn identity(n: usize) -> Self {
        HermitianMatrix(Matrix::identity(n))
    }

    pub fn diag(values: &[f64]) -> Self {
        HermitianMatrix(Matrix::diag_real(values))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }
}

impl Deref for HermitianMatrix {
    type Target = Matrix;

    fn deref(&self) -> &Matrix {
        &self.0
    }
}

/// Square matrix with `U*U = I`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix(Matrix);

impl UnitaryMatrix {
    pub fn new(m: Matrix, tol: &TolerancePolicy) -> Result<Self> {
        let n = m.dim()?;
        let defect = orthonormality_defect(&m);
        let threshold = tol.eq_threshold((n as f64).sqrt());
        if defect > threshold {
            return Err(Error::Precondition(format!(
                "matrix is not unitary: ‖U*U − I‖ = {defect:.3e} exceeds {threshold:.3e}"
            )));
        }
        Ok(UnitaryMatrix(m))
    }

    /// Wraps a matrix that is unitary by construction.
    pub(crate) fn new_unchecked(m: Matrix) -> Self {
        debug_assert!(m.is_square());
        UnitaryMatrix(m)
    }

    pub fn identity(n: usize) -> Self {
        UnitaryMatrix(Matrix::identity(n))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn as_isometry(&self) -> Isometry {
        Isometry(self.0.clone())
    }
}

impl Deref for UnitaryMatrix {
    type Target = Matrix;

    fn deref(&self) -> &Matrix {
        &self.0
    }
}

/// Rectangular `V` (rows ≥ cols) with orthonormal columns; embeds the small
/// space into the large one.
#[derive(Debug, Clone, PartialEq)]
pub struct Isometry(Matrix);

impl Isometry {
    pub fn new(m: Matrix, tol: &TolerancePolicy) -> Result<Self> {
        if m.rows() < m.cols() {
            return Err(Error::DimensionMismatch(format!(
                "an isometry needs at least as many rows as columns, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let defect = orthonormality_defect(&m);
        let threshold = tol.eq_threshold((m.cols() as f64).sqrt());
        if defect > threshold {
            return Err(Error::Precondition(format!(
                "matrix is not an isometry: ‖V*V − I‖ = {defect:.3e} exceeds {threshold:.3e}"
            )));
        }
        Ok(Isometry(m))
    }

    pub(crate) fn new_unchecked(m: Matrix) -> Self {
        debug_assert!(m.rows() >= m.cols());
        Isometry(m)
    }

    pub fn identity(n: usize) -> Self {
        Isometry(Matrix::identity(n))
    }

    /// Dimension of the large space.
    pub fn target_dim(&self) -> usize {
        self.0.rows()
    }

    /// Dimension of the embedded space.
    pub fn source_dim(&self) -> usize {
        self.0.cols()
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// `self ∘ inner`: embed through `inner` first, then through `self`.
    pub fn compose(&self, inner: &Isometry) -> Result<Isometry> {
        Ok(Isometry(self.0.checked_mul(&inner.0)?))
    }
}

impl Deref for Isometry {
    type Target = Matrix;

    fn deref(&self) -> &Matrix {
        &self.0
    }
}

/// `‖M*M − I‖_F`.
pub fn orthonormality_defect(m: &Matrix) -> f64 {
    let gram = &m.adjoint() * m;
    gram.distance(&Matrix::identity(m.cols()))
        .expect("gram matrix is square")
}
