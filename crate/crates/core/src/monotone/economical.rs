use super::MonotoneFamilyResult;
use crate::error::{Error, Result};
use crate::numerics::{kron, simultaneous_diagonalize, HermitianMatrix, Isometry, Matrix};
use crate::tolerance::TolerancePolicy;

/// `(n+1)·A ⊗ u_j u_j*` on `⊕^{n+1} H`: `A` placed in slot `j`, scaled so that its
/// compression to the diagonal copy `H ⊗ w`, `w = (1/√(n+1))Σ u_l`, is `A`.
pub fn essential_lift(a: &Matrix, slot: usize, n: usize) -> Result<Matrix> {
    a.dim()?;
    if slot > n {
        return Err(Error::Precondition(format!(
            "slot {slot} out of range for {} slots",
            n + 1
        )));
    }
    let mut pick = Matrix::zeros(n + 1, n + 1);
    pick[(slot, slot)] = ((n + 1) as f64).into();
    Ok(kron(a, &pick))
}

/// Monotone hermitian family on a space of dimension `2(n+1)·dim H − 1`
/// compressing to the hermitian `A_0, …, A_n`.
///
/// The essential lifts commute; in their joint eigenbasis `g_0, …, g_{D−1}` every
/// `g_k` with `k ≥ 1` is split as `(e_{1,k} + e_{2,k})/√2` with values
/// `s − kC` and `s + kC`, where `C = 1 + 2·(largest spread of any member)`. The
/// spreads grow with `k` fast enough that the resulting tuples form a chain.
///
/// `blowup` is the ratio `dim F / dim H` rounded up, i.e. `2(n+1)`.
pub fn economical_monotone_family(
    family: &[HermitianMatrix],
    tol: &TolerancePolicy,
) -> Result<MonotoneFamilyResult> {
    let d = family
        .first()
        .ok_or_else(|| Error::Precondition("family must not be empty".into()))?
        .dim();
    if let Some(bad) = family.iter().find(|a| a.dim() != d) {
        return Err(Error::DimensionMismatch(format!(
            "family mixes dimensions {d} and {}",
            bad.dim()
        )));
    }
    let n = family.len() - 1;
    let lifts = family
        .iter()
        .enumerate()
        .map(|(j, a)| Ok(HermitianMatrix::symmetrize(&essential_lift(a, j, n)?)))
        .collect::<Result<Vec<_>>>()?;
    let joint = simultaneous_diagonalize(&lifts, tol)?;
    let big = (n + 1) * d;

    let spread = joint
        .values
        .iter()
        .map(|row| {
            let hi = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let lo = row.iter().copied().fold(f64::INFINITY, f64::min);
            hi - lo
        })
        .fold(0.0, f64::max);
    let step = 1.0 + 2.0 * spread;

    let dilations = joint
        .values
        .iter()
        .map(|row| {
            let mut diag = Vec::with_capacity(2 * big - 1);
            diag.push(row[0]);
            for (k, &s) in row.iter().enumerate().skip(1) {
                let c = k as f64 * step;
                diag.push(s - c);
                diag.push(s + c);
            }
            HermitianMatrix::diag(&diag)
        })
        .collect();

    // H → H ⊗ w inside G → joint eigencoordinates → F, halving the doubled ones
    let w = 1.0 / ((n + 1) as f64).sqrt();
    let stacked = Matrix::from_fn(big, d, |r, c| {
        if r % d == c {
            w.into()
        } else {
            Default::default()
        }
    });
    let in_g = &joint.basis.adjoint() * &stacked;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let embedding = Matrix::from_fn(2 * big - 1, d, |r, c| {
        if r == 0 {
            in_g[(0, c)]
        } else {
            in_g[(r.div_ceil(2), c)] * h
        }
    });
    MonotoneFamilyResult::certify(
        dilations,
        Isometry::new_unchecked(embedding),
        false,
        2 * (n + 1),
        tol,
    )
}
