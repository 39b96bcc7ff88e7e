//! Dense complex matrix arithmetic and the factorizations every construction uses.

pub mod basis;
pub mod eigen;
pub mod kron;
pub mod matrix;
pub mod simdiag;
pub mod svd;
pub mod types;

pub use eigen::{eig_hermitian, eigvals_hermitian, HermitianEigen};
pub use kron::{all_ones, block_embed_isometry, compress, kron, normalized_trace};
pub use matrix::{Matrix, C64, ONE, ZERO};
pub use simdiag::{simultaneous_diagonalize, JointDiagonalization};
pub use svd::{singular_values, spectral_norm, svd, unitary_polar_factor, Polar, Svd};
pub use types::{orthonormality_defect, HermitianMatrix, Isometry, UnitaryMatrix};

use crate::error::Result;
use crate::tolerance::TolerancePolicy;

/// Smallest eigenvalue of a hermitian matrix.
pub fn min_eigenvalue(h: &HermitianMatrix) -> Result<f64> {
    Ok(eig_hermitian(h)?.min())
}

/// `λ_min(H) ≥ −psd_slack · max(1, ‖H‖)`.
pub fn is_positive_semidefinite(h: &HermitianMatrix, tol: &TolerancePolicy) -> Result<bool> {
    Ok(min_eigenvalue(h)? >= -tol.psd_threshold(h.frobenius_norm()))
}

/// `‖Y − X‖ / max(1, ‖X‖)`.
pub fn relative_distance(x: &Matrix, y: &Matrix) -> Result<f64> {
    Ok(x.distance(y)? / x.frobenius_norm().max(1.0))
}
