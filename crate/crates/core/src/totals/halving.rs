use crate::error::{Error, Result};
use crate::numerics::{
    eig_hermitian, unitary_polar_factor, HermitianMatrix, Matrix, UnitaryMatrix,
};
use crate::tolerance::TolerancePolicy;
use crate::verify::VerificationReport;

/// `W*AW = [[B, ⋆], [⋆, B]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HalvingResult {
    pub conjugator: UnitaryMatrix,
    pub common_block: Matrix,
}

impl HalvingResult {
    pub fn conjugated(&self, a: &Matrix) -> Matrix {
        let w = self.conjugator.as_matrix();
        &(&w.adjoint() * a) * w
    }

    /// Unitarity of `W` and both half-blocks of `W*AW` against `B`.
    pub fn verify(&self, a: &Matrix, tol: &TolerancePolicy) -> Result<VerificationReport> {
        let n = self.common_block.dim()?;
        let w = self.conjugator.as_matrix();
        if a.dim()? != 2 * n || w.rows() != 2 * n {
            return Err(Error::DimensionMismatch(format!(
                "halving of size {n} does not fit a {}x{} matrix",
                a.rows(),
                a.cols()
            )));
        }
        let c = self.conjugated(a);
        let eq = tol.eq_threshold(a.frobenius_norm());
        let mut report = VerificationReport::new();
        report.push(
            "unitarity",
            (&w.adjoint() * w).distance(&Matrix::identity(2 * n))?,
            tol.eq_threshold(((2 * n) as f64).sqrt()),
        );
        report.push(
            "upper block",
            c.block(0, 0, n, n).distance(&self.common_block)?,
            eq,
        );
        report.push(
            "lower block",
            c.block(n, n, n, n).distance(&self.common_block)?,
            eq,
        );
        Ok(report)
    }
}

/// `R = (1/√2)[[I, −I], [I, I]]`; conjugating `[[Y, P], [−P, Z]]` by it leaves
/// `(Y + Z)/2` in both diagonal blocks.
fn mixing(n: usize) -> Matrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i % n != j % n {
            return Default::default();
        }
        let v = if i >= n || j < n { s } else { -s };
        v.into()
    })
}

fn require_even(dim: usize) -> Result<usize> {
    if !dim.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "halving needs even dimension, got {dim}"
        )));
    }
    Ok(dim / 2)
}

/// Unitary `W` with equal diagonal half-blocks in `W*AW`.
///
/// Diagonalize `Re A` and take its top `n` eigenvectors as the first half, so
/// `A = [[Y, X], [−X*, Z]]`; rotate `X` to `|X|` with its polar factor, then mix
/// the halves with `R`. When the off-diagonal blocks of `A` already vanish the
/// first two steps are skipped.
pub fn halving_total_dilation(a: &Matrix, tol: &TolerancePolicy) -> Result<HalvingResult> {
    let n = require_even(a.dim()?)?;
    let r = mixing(n);
    let off = a
        .block(0, n, n, n)
        .frobenius_norm()
        .max(a.block(n, 0, n, n).frobenius_norm());
    let w = if off <= tol.eq_threshold(a.frobenius_norm()) {
        r
    } else {
        let g = eig_hermitian(&HermitianMatrix::symmetrize(a))?
            .vectors
            .into_matrix();
        let a1 = &(&g.adjoint() * a) * &g;
        let polar = unitary_polar_factor(&a1.block(0, n, n, n))?;
        let mut d = Matrix::identity(2 * n);
        d.set_block(0, 0, polar.unitary.as_matrix());
        &(&g * &d) * &r
    };
    let c = &(&w.adjoint() * a) * &w;
    let common = (&c.block(0, 0, n, n) + &c.block(n, n, n, n)).scale_real(0.5);
    Ok(HalvingResult {
        conjugator: UnitaryMatrix::new_unchecked(w),
        common_block: common,
    })
}

/// Rank-`n` orthogonal projection `E` such that `XE` and `XE^⊥` have the same
/// singular values: halve `X*X` and project onto the first half of the
/// conjugator's columns.
pub fn equal_singular_halving(x: &Matrix, tol: &TolerancePolicy) -> Result<Matrix> {
    let n = require_even(x.dim()?)?;
    let gram = HermitianMatrix::symmetrize(&(&x.adjoint() * x));
    let h = halving_total_dilation(&gram, tol)?;
    let q = h.conjugator.as_matrix().block(0, 0, 2 * n, n);
    Ok(&q * &q.adjoint())
}
