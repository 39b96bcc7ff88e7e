//! The three basic Kronecker dilations `A(k)`, `A[k]` and `A⟨k⟩`.

use crate::error::{Error, Result};
use crate::numerics::{all_ones, kron, Matrix};
use crate::tolerance::TolerancePolicy;

fn require_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Precondition(
            "block count k must be at least 1".into(),
        ));
    }
    Ok(())
}

/// `A(k) = A ⊗ I_k`: `k` copies of `A` down the diagonal.
pub fn dilate_diag(a: &Matrix, k: usize) -> Result<Matrix> {
    require_k(k)?;
    a.dim()?;
    Ok(kron(a, &Matrix::identity(k)))
}

/// `A[k] = A ⊗ E_k`, every block equal to `A`; positive when `A` is.
pub fn dilate_ones(a: &Matrix, k: usize) -> Result<Matrix> {
    require_k(k)?;
    a.dim()?;
    Ok(kron(a, &all_ones(k)?))
}

/// `A⟨k⟩`: diagonal blocks `A`, off-diagonal blocks `(I − A)/(k − 1)`.
///
/// Equal to `((I−A)/(k−1))[k] + ((kA−I)/(k−1))(k)`, hence positive when
/// `(1/k)I ⪯ A ⪯ I`. `A⟨1⟩ = A`.
pub fn dilate_bridge(a: &Matrix, k: usize) -> Result<Matrix> {
    require_k(k)?;
    let n = a.dim()?;
    if k == 1 {
        return Ok(a.clone());
    }
    let off = (&Matrix::identity(n) - a).scale_real(1.0 / (k - 1) as f64);
    let pattern = &all_ones(k)? - &Matrix::identity(k);
    Ok(&kron(a, &Matrix::identity(k)) + &kron(&off, &pattern))
}

/// Checks `A[k]·B⟨k⟩ = A[k] = B⟨k⟩·A[k]`, which holds for any `A`, `B` of equal size.
pub fn check_bridge_commutation(
    a: &Matrix,
    b: &Matrix,
    k: usize,
    tol: &TolerancePolicy,
) -> Result<bool> {
    if a.dim()? != b.dim()? {
        return Err(Error::DimensionMismatch(format!(
            "A is {}x{} but B is {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let ones = dilate_ones(a, k)?;
    let bridge = dilate_bridge(b, k)?;
    let threshold = tol.eq_threshold(ones.frobenius_norm() * bridge.frobenius_norm().max(1.0));
    let left = (&ones * &bridge).distance(&ones)?;
    let right = (&bridge * &ones).distance(&ones)?;
    Ok(left <= threshold && right <= threshold)
}
