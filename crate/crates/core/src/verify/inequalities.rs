//! Eigenvalue and determinant inequalities satisfied by compressions of positive
//! monotone (and antimonotone) pairs.

use super::monotone::{is_antimonotone_pair, is_monotone_family};
use super::report::VerificationReport;
use crate::error::{Error, Result};
use crate::numerics::{compress, eig_hermitian, eigvals_hermitian, HermitianMatrix, Isometry};
use crate::tolerance::TolerancePolicy;

struct Compressions {
    a_e: HermitianMatrix,
    b_e: HermitianMatrix,
    ab_e: HermitianMatrix,
    aba_e: HermitianMatrix,
}

fn compressions(a: &HermitianMatrix, b: &HermitianMatrix, v: &Isometry) -> Result<Compressions> {
    let ab = a.checked_mul(b)?;
    let aba = ab.checked_mul(a)?;
    Ok(Compressions {
        a_e: HermitianMatrix::symmetrize(&compress(a, v)?),
        b_e: HermitianMatrix::symmetrize(&compress(b, v)?),
        // AB and ABA are hermitian because A and B commute
        ab_e: HermitianMatrix::symmetrize(&compress(&ab, v)?),
        aba_e: HermitianMatrix::symmetrize(&compress(&aba, v)?),
    })
}

fn require_positive(name: &str, h: &HermitianMatrix, tol: &TolerancePolicy) -> Result<()> {
    let min = eig_hermitian(h)?.min();
    if min < -tol.psd_threshold(h.frobenius_norm()) {
        return Err(Error::Precondition(format!(
            "{name} must be positive semidefinite (smallest eigenvalue {min:.3e})"
        )));
    }
    Ok(())
}

/// Eigenvalues of `A_E B_E`, through the similar hermitian `B_E^{1/2} A_E B_E^{1/2}`.
fn product_eigenvalues(a_e: &HermitianMatrix, b_e: &HermitianMatrix) -> Result<Vec<f64>> {
    let root = eig_hermitian(b_e)?.apply(|x| x.max(0.0).sqrt());
    let sym = &(root.as_matrix() * a_e.as_matrix()) * root.as_matrix();
    eigvals_hermitian(&HermitianMatrix::symmetrize(&sym))
}

/// Largest `(lhs_k − rhs_k)` over `k`, relative to `max(1, |rhs_1|)`.
fn max_excess(lhs: &[f64], rhs: &[f64]) -> f64 {
    let scale = rhs.iter().chain(lhs).map(|x| x.abs()).fold(1.0, f64::max);
    lhs.iter()
        .zip(rhs)
        .map(|(l, r)| (l - r) / scale)
        .fold(f64::NEG_INFINITY, f64::max)
}

fn det(values: &[f64]) -> f64 {
    values.iter().product()
}

/// For a positive monotone pair `(A, B)` and the subspace `E = ran V`, checks for
/// every `k`:
///
/// * `λ_k(A_E B_E) ≤ λ_k((AB)_E)`
/// * `λ_k(A_E B_E A_E) ≤ λ_k((ABA)_E)`
/// * `det A_E · det B_E ≤ det (AB)_E`
///
/// A pair that is not positive and monotone is a precondition error, not a
/// failed inequality.
pub fn check_compression_inequalities(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    v: &Isometry,
    tol: &TolerancePolicy,
) -> Result<VerificationReport> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "pair has dimensions {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    require_positive("A", a, tol)?;
    require_positive("B", b, tol)?;
    is_monotone_family(&[a.clone(), b.clone()], tol)
        .map_err(|f| Error::Precondition(format!("(A, B) must be a monotone pair: {f}")))?;
    let c = compressions(a, b, v)?;

    let lhs1 = product_eigenvalues(&c.a_e, &c.b_e)?;
    let rhs1 = eigvals_hermitian(&c.ab_e)?;
    let aba = &(c.a_e.as_matrix() * c.b_e.as_matrix()) * c.a_e.as_matrix();
    let lhs2 = eigvals_hermitian(&HermitianMatrix::symmetrize(&aba))?;
    let rhs2 = eigvals_hermitian(&c.aba_e)?;
    let det_lhs = det(&eigvals_hermitian(&c.a_e)?) * det(&eigvals_hermitian(&c.b_e)?);
    let det_rhs = det(&rhs1);

    let mut report = VerificationReport::new();
    report.push(
        "λ(A_E B_E) ≤ λ((AB)_E)",
        max_excess(&lhs1, &rhs1),
        tol.rel_eq,
    );
    report.push(
        "λ(A_E B_E A_E) ≤ λ((ABA)_E)",
        max_excess(&lhs2, &rhs2),
        tol.rel_eq,
    );
    report.push(
        "det A_E · det B_E ≤ det (AB)_E",
        max_excess(&[det_lhs], &[det_rhs]),
        tol.rel_eq,
    );
    Ok(report)
}

/// For a positive antimonotone pair and a hyperplane `E = ran V`:
/// `det A_E · det B_E ≥ det (AB)_E`.
pub fn check_antimonotone_det_reversal(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    v: &Isometry,
    tol: &TolerancePolicy,
) -> Result<VerificationReport> {
    if v.target_dim() != a.dim() || v.source_dim() + 1 != v.target_dim() {
        return Err(Error::Precondition(format!(
            "subspace must be a hyperplane of dimension {}, got dimension {}",
            a.dim().saturating_sub(1),
            v.source_dim()
        )));
    }
    require_positive("A", a, tol)?;
    require_positive("B", b, tol)?;
    let anti = is_antimonotone_pair(a, b, tol);
    if !anti.passed {
        return Err(Error::Precondition(format!(
            "(A, B) must be an antimonotone pair (failed check: {})",
            anti.worst.unwrap_or_default()
        )));
    }
    let c = compressions(a, b, v)?;
    let det_lhs = det(&eigvals_hermitian(&c.a_e)?) * det(&eigvals_hermitian(&c.b_e)?);
    let det_rhs = det(&eigvals_hermitian(&c.ab_e)?);
    let mut report = VerificationReport::new();
    report.push(
        "det A_E · det B_E ≥ det (AB)_E",
        max_excess(&[det_rhs], &[det_lhs]),
        tol.rel_eq,
    );
    Ok(report)
}
