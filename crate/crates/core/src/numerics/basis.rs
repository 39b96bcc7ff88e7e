//! Orthonormal-basis helpers shared by the factorizations.

use super::matrix::{C64, ZERO};

pub fn dot(u: &[C64], v: &[C64]) -> C64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub fn norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Removes the components of `v` along each (orthonormal) vector in `basis`,
/// twice, which keeps the result orthogonal to working precision.
pub fn project_out(v: &mut [C64], basis: &[Vec<C64>]) {
    for _ in 0..2 {
        for b in basis {
            let c = dot(b, v);
            for (x, y) in v.iter_mut().zip(b) {
                *x -= c * y;
            }
        }
    }
}

/// Extends the orthonormal vectors in `basis` to an orthonormal basis of `C^n`.
///
/// Standard basis vectors are tried greedily, always taking the one with the
/// largest component outside the current span (lowest index on ties), so the
/// result is deterministic.
pub fn complete_orthonormal(basis: &[Vec<C64>], n: usize) -> Vec<Vec<C64>> {
    let mut out: Vec<Vec<C64>> = basis.to_vec();
    while out.len() < n {
        let mut best: Option<(f64, Vec<C64>)> = None;
        for m in 0..n {
            let mut e = vec![ZERO; n];
            e[m] = C64::new(1.0, 0.0);
            project_out(&mut e, &out);
            let r = norm(&e);
            if best.as_ref().is_none_or(|(b, _)| r > *b) {
                best = Some((r, e));
            }
        }
        let (r, mut e) = best.expect("n > 0");
        for x in e.iter_mut() {
            *x /= r;
        }
        out.push(e);
    }
    out
}

/// Multiplies `v` by a unit phase so that its first component with modulus
/// above `1e-12` is real and positive.
pub fn normalize_phase(v: &mut [C64]) {
    if let Some(z) = v.iter().copied().find(|z| z.norm() > 1e-12) {
        let phase = z.conj() / z.norm();
        for x in v.iter_mut() {
            *x *= phase;
        }
        if let Some(first) = v.iter_mut().find(|x| x.norm() > 1e-12) {
            first.im = 0.0;
        }
    }
}
