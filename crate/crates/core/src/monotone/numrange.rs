//! Monotone pairs of strictly positive operators from the numerical range of a
//! commuting normal lift.

use super::MonotoneFamilyResult;
use crate::error::{Error, Result};
use crate::numerics::basis::complete_orthonormal;
use crate::numerics::{
    block_embed_isometry, eig_hermitian, kron, simultaneous_diagonalize, HermitianMatrix, Isometry,
    Matrix, C64,
};
use crate::tolerance::TolerancePolicy;

/// Triangle with vertices strictly increasing in both coordinates, inside the
/// open first quadrant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub vertices: [C64; 3],
}

fn cross(a: C64, b: C64) -> f64 {
    a.re * b.im - a.im * b.re
}

impl Triangle {
    /// Fails unless `Re v_1 < Re v_2 < Re v_3`, `Im v_1 < Im v_2 < Im v_3` and all
    /// coordinates are positive.
    pub fn new(vertices: [C64; 3]) -> Result<Self> {
        let [a, b, c] = vertices;
        let ordered = a.re < b.re && b.re < c.re && a.im < b.im && b.im < c.im;
        if !ordered || a.re <= 0.0 || a.im <= 0.0 {
            return Err(Error::Precondition(format!(
                "triangle vertices {vertices:?} must increase in both coordinates inside the open quadrant"
            )));
        }
        Ok(Triangle { vertices })
    }

    /// Barycentric coordinates of `z` (sum to one; all non-negative iff `z` is inside).
    pub fn barycentric(&self, z: C64) -> [f64; 3] {
        let [p1, p2, p3] = self.vertices;
        let area = cross(p2 - p1, p3 - p1);
        let c1 = cross(p2 - z, p3 - z) / area;
        let c2 = cross(p3 - z, p1 - z) / area;
        [c1, c2, 1.0 - c1 - c2]
    }

    pub fn contains(&self, z: C64, slack: f64) -> bool {
        self.barycentric(z).iter().all(|&c| c >= -slack)
    }
}

/// A triangle containing every point, built from their bounding box
/// `[a, b] × [c, d]`: `v_1 = (a/2, c/2)`, `v_2 = (b+1, 3c/4)`, `v_3` far enough up
/// the line `x = b + 2` that the edge `v_1 v_3` clears the box.
pub fn choose_triangle(points: &[C64], tol: &TolerancePolicy) -> Result<Triangle> {
    if points.is_empty() {
        return Err(Error::Precondition("no points to enclose".into()));
    }
    if let Some(z) = points.iter().find(|z| !(z.re > 0.0 && z.im > 0.0)) {
        return Err(Error::Precondition(format!(
            "point {z} is outside the open first quadrant"
        )));
    }
    let fold = |f: fn(&C64) -> f64, init: f64, pick: fn(f64, f64) -> f64| {
        points.iter().map(f).fold(init, pick)
    };
    let a = fold(|z| z.re, f64::INFINITY, f64::min);
    let b = fold(|z| z.re, f64::NEG_INFINITY, f64::max);
    let c = fold(|z| z.im, f64::INFINITY, f64::min);
    let d = fold(|z| z.im, f64::NEG_INFINITY, f64::max);
    let y3 = c / 2.0 + (d - c / 2.0) * (b + 2.0 - a / 2.0) / (a / 2.0) + 1.0;
    let tri = Triangle::new([
        C64::new(a / 2.0, c / 2.0),
        C64::new(b + 1.0, 0.75 * c),
        C64::new(b + 2.0, y3),
    ])?;
    if let Some(z) = points.iter().find(|&&z| !tri.contains(z, tol.rel_eq)) {
        return Err(Error::Verification(format!(
            "triangle {:?} does not contain spectrum point {z}",
            tri.vertices
        )));
    }
    Ok(tri)
}

/// `R·diag(v_1, v_2, v_3)·R*` with `R` real orthogonal and first row
/// `(√c_1, √c_2, √c_3)`, the barycentric coordinates of `z`: a normal matrix with
/// spectrum the vertices and corner entry `z`.
pub fn scalar_normal_dilation(z: C64, tri: &Triangle, tol: &TolerancePolicy) -> Result<Matrix> {
    let c = tri.barycentric(z);
    if c.iter().any(|&x| x < -tol.rel_eq) {
        return Err(Error::Precondition(format!(
            "{z} lies outside the triangle (barycentric coordinates {c:?})"
        )));
    }
    let clipped = c.map(|x| x.max(0.0));
    let total: f64 = clipped.iter().sum();
    let first: Vec<C64> = clipped
        .iter()
        .map(|x| C64::new((x / total).sqrt(), 0.0))
        .collect();
    let q = Matrix::from_columns(3, &complete_orthonormal(&[first], 3));
    let r = q.transpose();
    Ok(&(&r * &Matrix::diag(&tri.vertices)) * &r.adjoint())
}

/// `S = [[A, A−r], [A−r, A]]`, `T = [[B, r−B], [r−B, B]]` with
/// `r = min(λ_min(A), λ_min(B))`: commuting, strictly positive, compressing to
/// `A` and `B` on the first copy of `H`.
pub fn positive_commuting_lift(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    tol: &TolerancePolicy,
) -> Result<(HermitianMatrix, HermitianMatrix, f64)> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "A is {0}x{0} but B is {1}x{1}",
            a.dim(),
            b.dim()
        )));
    }
    let min_a = eig_hermitian(a)?.min();
    let min_b = eig_hermitian(b)?.min();
    for (name, min, h) in [("A", min_a, a), ("B", min_b, b)] {
        if min <= tol.psd_threshold(h.frobenius_norm()) {
            return Err(Error::Precondition(format!(
                "{name} must be strictly positive (smallest eigenvalue {min:.3e})"
            )));
        }
    }
    let r = min_a.min(min_b);
    let n = a.dim();
    let swap = Matrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]);
    let shift = Matrix::identity(n).scale_real(r);
    let i2 = Matrix::identity(2);
    let s = &kron(a, &i2) + &kron(&(a.as_matrix() - &shift), &swap);
    let t = &kron(b, &i2) - &kron(&(b.as_matrix() - &shift), &swap);
    Ok((
        HermitianMatrix::symmetrize(&s),
        HermitianMatrix::symmetrize(&t),
        r,
    ))
}

/// Monotone pair of strictly positive operators on a space of dimension
/// `6·dim H` compressing to the strictly positive `(A, B)`, which need not commute.
///
/// `N = S + iT` is normal with spectrum in the open quadrant; each eigenvalue is
/// dilated to a 3×3 normal matrix whose spectrum is a common doubly-increasing
/// triangle, so the real and imaginary parts of the result are a chain.
pub fn numerical_range_pair(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    tol: &TolerancePolicy,
) -> Result<MonotoneFamilyResult> {
    let (s, t, _) = positive_commuting_lift(a, b, tol)?;
    let joint = simultaneous_diagonalize(&[s, t], tol)?;
    let g = 2 * a.dim();
    let spectrum: Vec<C64> = (0..g)
        .map(|k| C64::new(joint.values[0][k], joint.values[1][k]))
        .collect();
    let tri = choose_triangle(&spectrum, tol)?;

    let mut m = Matrix::zeros(3 * g, 3 * g);
    for (k, &z) in spectrum.iter().enumerate() {
        m.set_block(3 * k, 3 * k, &scalar_normal_dilation(z, &tri, tol)?);
    }
    // H → first copy in H ⊕ H → joint eigencoordinates → first slot of each 3-block
    let into_g = &joint.basis.adjoint() * block_embed_isometry(2, 0, a.dim())?.as_matrix();
    let mut v = Matrix::zeros(3 * g, a.dim());
    for k in 0..g {
        for c in 0..a.dim() {
            v[(3 * k, c)] = into_g[(k, c)];
        }
    }
    let dilations = vec![
        HermitianMatrix::symmetrize(&m.hermitian_part()),
        HermitianMatrix::symmetrize(&m.skew_hermitian_part()),
    ];
    MonotoneFamilyResult::certify(dilations, Isometry::new_unchecked(v), false, 6, tol)
}
