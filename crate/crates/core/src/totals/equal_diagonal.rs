//! Unitary conjugation that makes every diagonal entry equal to the normalized
//! trace — the constructive form of "τ(A) is totally dilated into A".

use crate::error::{Error, Result};
use crate::numerics::basis::{complete_orthonormal, dot};
use crate::numerics::{
    eig_hermitian, normalized_trace, HermitianMatrix, Matrix, UnitaryMatrix, C64, ZERO,
};
use crate::tolerance::TolerancePolicy;

fn quad(m: &Matrix, x: &[C64]) -> C64 {
    dot(x, &m.mul_vec(x))
}

/// Looks for a unit `u ∈ C²` with `u* M u = 0`.
///
/// Returns `u` together with a margin: non-negative when 0 lies in the
/// numerical range of `M`, negative (roughly the distance to it) when it does
/// not, in which case `u` is only the closest attempt. Closed form: restrict to
/// the level set `u*(Re M)u = 0`, a circle of relative phases, and solve for the
/// phase that zeroes the imaginary part.
pub fn zero_in_numerical_range_2x2(m: &Matrix) -> Result<([C64; 2], f64)> {
    if m.shape() != (2, 2) {
        return Err(Error::DimensionMismatch(format!(
            "expected a 2x2 matrix, got {:?}",
            m.shape()
        )));
    }
    let scale = m.frobenius_norm().max(1.0);
    let h = HermitianMatrix::symmetrize(&m.hermitian_part());
    let k = HermitianMatrix::symmetrize(&m.skew_hermitian_part());
    let eh = eig_hermitian(&h)?;
    let (h1, h2) = (eh.values[0], eh.values[1]);

    if h1 - h2 <= 1e-13 * scale {
        // Re M is (nearly) scalar: any vector fixes the real part, so work with Im M alone.
        let ek = eig_hermitian(&k)?;
        let (k1, k2) = (ek.values[0], ek.values[1]);
        let margin = h1.min(-h2).min(k1).min(-k2);
        let q = ek.vectors.as_matrix();
        if k1 - k2 <= 1e-13 * scale {
            return Ok(([q[(0, 0)], q[(1, 0)]], margin));
        }
        let a = (-k2 / (k1 - k2)).clamp(0.0, 1.0).sqrt();
        let b = (k1 / (k1 - k2)).clamp(0.0, 1.0).sqrt();
        return Ok((
            [q[(0, 0)] * a + q[(0, 1)] * b, q[(1, 0)] * a + q[(1, 1)] * b],
            margin,
        ));
    }

    let a = (-h2 / (h1 - h2)).clamp(0.0, 1.0).sqrt();
    let b = (h1 / (h1 - h2)).clamp(0.0, 1.0).sqrt();
    let p = eh.vectors.as_matrix();
    let (p1, p2) = (p.column(0), p.column(1));
    let k11 = quad(&k, &p1).re;
    let k22 = quad(&k, &p2).re;
    let k12 = dot(&p1, &k.mul_vec(&p2));
    // u = a p1 + b e^{iφ} p2  ⇒  u*Ku = c + 2ab|k12| cos(φ + arg k12)
    let c = a * a * k11 + b * b * k22;
    let rho = 2.0 * a * b * k12.norm();
    let margin = h1.min(-h2).min(rho - c.abs());
    let phi = if rho > 0.0 {
        (-c / rho).clamp(-1.0, 1.0).acos() - k12.arg()
    } else {
        0.0
    };
    let w = C64::from_polar(b, phi);
    Ok(([p1[0] * a + p2[0] * w, p1[1] * a + p2[1] * w], margin))
}

/// Compression of `c` onto the orthonormal pair `(f1, f2)`.
fn compress_pair(c: &Matrix, f1: &[C64], f2: &[C64]) -> Matrix {
    let (cf1, cf2) = (c.mul_vec(f1), c.mul_vec(f2));
    Matrix::from_vec(
        2,
        2,
        vec![dot(f1, &cf1), dot(f1, &cf2), dot(f2, &cf1), dot(f2, &cf2)],
    )
    .expect("2x2")
}

fn unit(n: usize, i: usize) -> Vec<C64> {
    let mut e = vec![ZERO; n];
    e[i] = C64::new(1.0, 0.0);
    e
}

fn combine(u: [C64; 2], f1: &[C64], f2: &[C64]) -> Vec<C64> {
    f1.iter()
        .zip(f2)
        .map(|(a, b)| u[0] * a + u[1] * b)
        .collect()
}

fn cross(a: C64, b: C64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// A unit vector supported on coordinates `t..n` with `x* C x ≈ 0`, given that the
/// trailing principal block of `c` has trace zero.
fn zero_vector(c: &Matrix, t: usize, slack: f64) -> Result<Vec<C64>> {
    let n = c.rows();
    let d: Vec<C64> = (0..n).map(|i| c[(i, i)]).collect();

    if let Some(i) = (t..n).min_by(|&i, &j| d[i].norm().total_cmp(&d[j].norm())) {
        if d[i].norm() <= slack {
            return Ok(unit(n, i));
        }
    }

    // a coordinate plane whose numerical range contains 0
    let mut best: Option<(f64, Vec<C64>)> = None;
    for i in t..n {
        for j in i + 1..n {
            let (ei, ej) = (unit(n, i), unit(n, j));
            let (u, margin) = zero_in_numerical_range_2x2(&compress_pair(c, &ei, &ej))?;
            if margin >= -slack && best.as_ref().is_none_or(|(m, _)| margin > *m) {
                best = Some((margin, combine(u, &ei, &ej)));
            }
        }
    }
    if let Some((_, x)) = best {
        return Ok(x);
    }

    // otherwise 0 sits strictly inside a triangle of diagonal entries
    let mut tri: Option<(f64, [usize; 3], [f64; 3])> = None;
    for a in t..n {
        for b in a + 1..n {
            for e in b + 1..n {
                let area = cross(d[b] - d[a], d[e] - d[a]);
                if area == 0.0 {
                    continue;
                }
                let w = [
                    cross(d[b], d[e]) / area,
                    cross(d[e], d[a]) / area,
                    cross(d[a], d[b]) / area,
                ];
                let score = w[0].min(w[1]).min(w[2]);
                if score >= 0.0 && tri.as_ref().is_none_or(|(s, _, _)| score > *s) {
                    tri = Some((score, [a, b, e], w));
                }
            }
        }
    }
    let Some((_, [a, b, e], w)) = tri else {
        return Err(Error::NonConvergence {
            what: "equal-diagonal kernel: no plane or triangle contains the trace",
            iterations: t,
            residual: d[t..]
                .iter()
                .map(|z| z.norm())
                .fold(f64::INFINITY, f64::min),
        });
    };
    // first land on the point q of the edge (d_a, d_b) in line with 0 and d_e
    let q = (d[a] * w[0] + d[b] * w[1]) / (w[0] + w[1]);
    let (ea, eb) = (unit(n, a), unit(n, b));
    let shifted = &compress_pair(c, &ea, &eb) - &Matrix::identity(2).scale(q);
    let (u, _) = zero_in_numerical_range_2x2(&shifted)?;
    let f1 = combine(u, &ea, &eb);
    let ee = unit(n, e);
    let (v, _) = zero_in_numerical_range_2x2(&compress_pair(c, &f1, &ee))?;
    Ok(combine(v, &f1, &ee))
}

/// Unitary `U` with every diagonal entry of `U*AU` equal to `tr(A)/n`.
///
/// Each step finds a unit vector `x` in the untouched coordinates with
/// `x*(A − τ)x = 0`, makes it the next basis vector and recurses on the
/// trailing block; at most `n − 1` steps.
pub fn equal_diagonal_unitary(a: &Matrix, tol: &TolerancePolicy) -> Result<UnitaryMatrix> {
    let n = a.dim()?;
    if n == 0 {
        return Ok(UnitaryMatrix::identity(0));
    }
    let tau = normalized_trace(a)?;
    let slack = 1e-12 * a.frobenius_norm().max(1.0);
    let mut c = a - &Matrix::identity(n).scale(tau);
    let mut u = Matrix::identity(n);
    for t in 0..n - 1 {
        let x = zero_vector(&c, t, slack)?;
        let cols = complete_orthonormal(&[x[t..].to_vec()], n - t);
        let mut q = Matrix::identity(n);
        for (j, col) in cols.iter().enumerate() {
            for (i, z) in col.iter().enumerate() {
                q[(t + i, t + j)] = *z;
            }
        }
        c = &(&q.adjoint() * &c) * &q;
        u = &u * &q;
    }
    let worst = (0..n).map(|i| c[(i, i)].norm()).fold(0.0, f64::max);
    if worst > tol.eq_threshold(a.frobenius_norm()) {
        return Err(Error::NonConvergence {
            what: "equal-diagonal kernel",
            iterations: n - 1,
            residual: worst,
        });
    }
    Ok(UnitaryMatrix::new_unchecked(u))
}
