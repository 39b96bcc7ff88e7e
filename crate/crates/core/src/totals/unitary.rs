use super::{equal_diagonal_unitary, TotalDilationResult};
use crate::error::{Error, Result};
use crate::numerics::{
    eig_hermitian, kron, spectral_norm, unitary_polar_factor, Matrix, UnitaryMatrix, C64,
};
use crate::tolerance::TolerancePolicy;

/// A `k×k` unitary whose diagonal entries all equal `x ∈ [−1, 1]`.
///
/// For `k = 2` this is the plane rotation with `cos θ = x`. For larger `k` the
/// spectrum is spread over conjugate pairs `e^{±iθ}` (plus a single `±1` when `k`
/// is odd) with trace `k·x`, then the diagonal is flattened by
/// [`equal_diagonal_unitary`].
pub fn constant_diagonal_unitary(x: f64, k: usize, tol: &TolerancePolicy) -> Result<UnitaryMatrix> {
    if k < 2 {
        return Err(Error::Precondition(format!(
            "block count k must be at least 2, got {k}"
        )));
    }
    if x.is_nan() || x.abs() > 1.0 + tol.psd_slack {
        return Err(Error::Precondition(format!(
            "diagonal value {x} lies outside [-1, 1]"
        )));
    }
    let x = x.clamp(-1.0, 1.0);
    if k == 2 {
        let s = (1.0 - x * x).sqrt();
        return Ok(UnitaryMatrix::new_unchecked(Matrix::from_real(
            2,
            2,
            &[x, -s, s, x],
        )));
    }
    // odd k: one real eigenvalue of the same sign as x keeps cos θ in [−1, 1]
    let kf = k as f64;
    let (cos, real) = if k.is_multiple_of(2) {
        (x, vec![])
    } else if x >= 0.0 {
        ((kf * x - 1.0) / (kf - 1.0), vec![C64::new(1.0, 0.0)])
    } else {
        ((kf * x + 1.0) / (kf - 1.0), vec![C64::new(-1.0, 0.0)])
    };
    let ones = real.len();
    let theta = cos.clamp(-1.0, 1.0).acos();
    let mut eigs = real;
    for _ in 0..(k - ones) / 2 {
        eigs.push(C64::from_polar(1.0, theta));
        eigs.push(C64::from_polar(1.0, -theta));
    }
    let d = Matrix::diag(&eigs);
    let q = equal_diagonal_unitary(&d, tol)?;
    Ok(UnitaryMatrix::new_unchecked(
        &(&q.adjoint() * &d) * q.as_matrix(),
    ))
}

/// Unitary on `⊕^k H` whose diagonal blocks all equal the contraction `A`.
///
/// With `A = V|A|` and `|A| = Σ x_j h_j h_j*`, the dilation is
/// `(⊕^k V) · Σ_j (h_j h_j*) ⊗ U_j` where `U_j` has constant diagonal `x_j`.
pub fn unitary_total_dilation(
    a: &Matrix,
    k: usize,
    tol: &TolerancePolicy,
) -> Result<TotalDilationResult> {
    let n = a.dim()?;
    if k < 2 {
        return Err(Error::Precondition(format!(
            "block count k must be at least 2, got {k}"
        )));
    }
    if n == 0 {
        return Ok(TotalDilationResult::new(Matrix::zeros(0, 0), a.clone(), k));
    }
    let norm = spectral_norm(a)?;
    if norm > 1.0 + tol.psd_slack {
        return Err(Error::Precondition(format!(
            "A must be a contraction (spectral norm {norm:.6} > 1)"
        )));
    }
    let polar = unitary_polar_factor(a)?;
    let e = eig_hermitian(&polar.positive)?;
    let h = e.vectors.as_matrix();
    let mut w = Matrix::zeros(n * k, n * k);
    for (j, &x) in e.values.iter().enumerate() {
        let col = h.column(j);
        let proj = Matrix::from_fn(n, n, |r, c| col[r] * col[c].conj());
        let uj = constant_diagonal_unitary(x.clamp(0.0, 1.0), k, tol)?;
        w = &w + &kron(&proj, &uj);
    }
    let v = kron(polar.unitary.as_matrix(), &Matrix::identity(k));
    Ok(TotalDilationResult::new(&v * &w, a.clone(), k))
}
