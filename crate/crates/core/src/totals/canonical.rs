use crate::error::{Error, Result};
use crate::numerics::basis::{complete_orthonormal, norm, project_out};
use crate::numerics::{eig_hermitian, HermitianMatrix, Matrix, C64, ZERO};
use crate::tolerance::TolerancePolicy;

/// `QᵀAQ = [[0, −B], [B, 0]]` with `Q` real orthogonal and `B` diagonal, so the
/// antisymmetric `A` totally dilates the zero operator of half its dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct AntisymmetricCanonical {
    pub orthogonal: Matrix,
    pub b: Matrix,
}

impl AntisymmetricCanonical {
    pub fn canonical_form(&self) -> Matrix {
        let n = self.b.rows();
        let mut m = Matrix::zeros(2 * n, 2 * n);
        m.set_block(0, n, &-&self.b);
        m.set_block(n, 0, &self.b);
        m
    }
}

fn real_vec(v: &[C64], part: impl Fn(C64) -> f64) -> Vec<C64> {
    v.iter().map(|z| C64::new(part(*z), 0.0)).collect()
}

/// Pairs the `±λ` eigenvectors of the hermitian `iA`: for `λ > 0` with
/// eigenvector `x + iy`, `√2·x` and `√2·y` are orthonormal with `Ax = λy`,
/// `Ay = −λx`. The real kernel is split in half and paired with `λ = 0`.
pub fn antisymmetric_canonical(
    a: &Matrix,
    tol: &TolerancePolicy,
) -> Result<AntisymmetricCanonical> {
    let dim = a.dim()?;
    if !dim.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "antisymmetric canonical form needs even dimension, got {dim}"
        )));
    }
    let eq = tol.eq_threshold(a.frobenius_norm());
    let sym_defect = (a + &a.transpose()).frobenius_norm();
    if a.max_imag() > eq || sym_defect > eq {
        return Err(Error::Precondition(format!(
            "A must be real antisymmetric (imaginary part {:.3e}, ‖A + Aᵀ‖ = {sym_defect:.3e})",
            a.max_imag()
        )));
    }
    let half = dim / 2;
    let a_real = a.map(|z| C64::new(z.re, 0.0));
    let ia = HermitianMatrix::symmetrize(&a_real.scale(C64::new(0.0, 1.0)));
    let e = eig_hermitian(&ia)?;
    let zero = tol.eig_threshold(a.frobenius_norm());
    let positive = e.values.iter().take(half).filter(|&&l| l > zero).count();

    let root2 = std::f64::consts::SQRT_2;
    let mut xs = Vec::with_capacity(half);
    let mut ys = Vec::with_capacity(half);
    let mut lambdas = Vec::with_capacity(half);
    for k in 0..positive {
        let v = e.vectors.column(k);
        xs.push(real_vec(&v, |z| root2 * z.re));
        ys.push(real_vec(&v, |z| root2 * z.im));
        lambdas.push(e.values[k]);
    }

    // kernel: real and imaginary parts of the middle eigenvectors span it over R
    let mut accepted: Vec<Vec<C64>> = xs.iter().chain(&ys).cloned().collect();
    let mut kernel = Vec::new();
    for k in positive..dim - positive {
        let v = e.vectors.column(k);
        for part in [real_vec(&v, |z| z.re), real_vec(&v, |z| z.im)] {
            let mut w = part;
            project_out(&mut w, &accepted);
            let r = norm(&w);
            if r > 1e-6 && kernel.len() < 2 * (half - positive) {
                w.iter_mut().for_each(|z| *z /= r);
                accepted.push(w.clone());
                kernel.push(w);
            }
        }
    }
    if kernel.len() < 2 * (half - positive) {
        // fall back to standard-basis completion; the residual check below judges it
        let full = complete_orthonormal(&accepted, dim);
        kernel.extend(full[accepted.len()..].iter().cloned());
    }
    let m = half - positive;
    xs.extend(kernel[..m].iter().cloned());
    ys.extend(kernel[m..2 * m].iter().cloned());
    lambdas.extend(std::iter::repeat_n(0.0, m));

    let columns: Vec<Vec<C64>> = xs.into_iter().chain(ys).collect();
    let q = Matrix::from_columns(dim, &columns).map(|z| C64::new(z.re, 0.0));
    let result = AntisymmetricCanonical {
        orthogonal: q,
        b: Matrix::diag_real(&lambdas),
    };
    let q = &result.orthogonal;
    let residual = (&(&q.transpose() * &a_real) * q).distance(&result.canonical_form())?;
    let ortho = (&q.transpose() * q).distance(&Matrix::identity(dim))?;
    if residual > eq || ortho > tol.eq_threshold((dim as f64).sqrt()) {
        return Err(Error::Verification(format!(
            "canonical form residual {residual:.3e}, orthogonality defect {ortho:.3e}"
        )));
    }
    debug_assert!(result.b.data().iter().all(|z| z.im == ZERO.im));
    Ok(result)
}
