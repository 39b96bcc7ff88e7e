use super::kronecker::{dilate_bridge, dilate_diag, dilate_ones};
use super::MonotoneFamilyResult;
use crate::error::{Error, Result};
use crate::numerics::{block_embed_isometry, eig_hermitian, HermitianMatrix, Matrix};
use crate::tolerance::TolerancePolicy;

/// Block multipliers `k_1, …, k_n` for a family `A_0, …, A_n` (with `k_0 = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionSpec {
    ks: Vec<usize>,
}

impl ConditionSpec {
    pub fn new(ks: Vec<usize>) -> Result<Self> {
        if ks.contains(&0) {
            return Err(Error::Precondition(
                "every k_j must be a positive integer".into(),
            ));
        }
        Ok(ConditionSpec { ks })
    }

    /// Same `k` for members `1..=n`.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        Self::new(vec![k; n])
    }

    /// Number of members after `A_0`.
    pub fn n(&self) -> usize {
        self.ks.len()
    }

    /// `k_j`, with `k_0 = 1`.
    pub fn k(&self, j: usize) -> usize {
        if j == 0 {
            1
        } else {
            self.ks[j - 1]
        }
    }

    /// `k'_j = Π_{l<j} k_l`.
    pub fn k_before(&self, j: usize) -> usize {
        (0..j).map(|l| self.k(l)).product()
    }

    /// `k''_j = Π_{l>j} k_l`.
    pub fn k_after(&self, j: usize) -> usize {
        (j + 1..=self.n()).map(|l| self.k(l)).product()
    }

    pub fn total(&self) -> usize {
        self.ks.iter().product()
    }
}

fn spectrum_bounds(h: &HermitianMatrix) -> Result<(f64, f64)> {
    let e = eig_hermitian(h)?;
    Ok((e.min(), e.max()))
}

fn require_psd(name: &str, h: &HermitianMatrix, tol: &TolerancePolicy) -> Result<()> {
    let (min, _) = spectrum_bounds(h)?;
    if min < -tol.psd_threshold(h.frobenius_norm()) {
        return Err(Error::Precondition(format!(
            "{name} must be positive semidefinite (smallest eigenvalue {min:.3e})"
        )));
    }
    Ok(())
}

fn require_same_dim(family: &[HermitianMatrix]) -> Result<usize> {
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
    Ok(d)
}

/// `(A[k], B⟨k⟩)`: a positive monotone pair on `⊕^k H` totally dilating `(A, B)`.
///
/// Needs `A ⪰ 0` and `(1/k)I ⪯ B ⪯ I`.
pub fn monotone_pair(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    k: usize,
    tol: &TolerancePolicy,
) -> Result<MonotoneFamilyResult> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "A is {0}x{0} but B is {1}x{1}",
            a.dim(),
            b.dim()
        )));
    }
    if k < 2 {
        return Err(Error::Precondition(format!(
            "block count k must be at least 2, got {k}"
        )));
    }
    require_psd("A", a, tol)?;
    let (lo, hi) = spectrum_bounds(b)?;
    let slack = tol.psd_threshold(b.frobenius_norm());
    if lo < 1.0 / k as f64 - slack || hi > 1.0 + slack {
        return Err(Error::Precondition(format!(
            "B must satisfy (1/{k})I ⪯ B ⪯ I (spectrum [{lo:.6}, {hi:.6}])"
        )));
    }
    let dilations = vec![
        HermitianMatrix::symmetrize(&dilate_ones(a, k)?),
        HermitianMatrix::symmetrize(&dilate_bridge(b, k)?),
    ];
    let embedding = block_embed_isometry(k, 0, a.dim())?;
    MonotoneFamilyResult::certify(dilations, embedding, true, k, tol)
}

/// Scale bringing `A_j` into `[1/k, 1]`: 1 if it already is, `λ_max` if its
/// condition number is at most `k`.
fn member_scale(j: usize, a: &HermitianMatrix, k: usize, tol: &TolerancePolicy) -> Result<f64> {
    let (lo, hi) = spectrum_bounds(a)?;
    let slack = tol.psd_threshold(a.frobenius_norm());
    let kf = k as f64;
    if lo >= 1.0 / kf - slack && hi <= 1.0 + slack {
        return Ok(1.0);
    }
    if lo > 0.0 && hi <= kf * lo * (1.0 + tol.psd_slack) {
        return Ok(hi);
    }
    Err(Error::Precondition(format!(
        "member {j} needs condition number at most k_{j} = {k} (spectrum [{lo:.6}, {hi:.6}])"
    )))
}

/// `B_j = A_j(k'_j)⟨k_j⟩[k''_j]` on `⊕^{Πk_j} H`: a positive monotone family
/// totally dilating `A_0, …, A_n`.
///
/// `A_0` must be positive; each later `A_j` must have condition number at most
/// `k_j` (members outside `[1/k_j, 1]` are rescaled and scaled back).
pub fn monotone_family(
    family: &[HermitianMatrix],
    spec: &ConditionSpec,
    tol: &TolerancePolicy,
) -> Result<MonotoneFamilyResult> {
    let d = require_same_dim(family)?;
    if spec.n() + 1 != family.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} members need {} block multipliers, got {}",
            family.len(),
            family.len() - 1,
            spec.n()
        )));
    }
    require_psd("member 0", &family[0], tol)?;
    let mut dilations = Vec::with_capacity(family.len());
    for (j, a) in family.iter().enumerate() {
        let scale = if j == 0 {
            1.0
        } else {
            member_scale(j, a, spec.k(j), tol)?
        };
        let unit = if scale == 1.0 {
            a.as_matrix().clone()
        } else {
            a.scale_real(1.0 / scale)
        };
        let widened = dilate_diag(&unit, spec.k_before(j))?;
        let bridged = dilate_bridge(&widened, spec.k(j))?;
        let mut b = dilate_ones(&bridged, spec.k_after(j))?;
        if scale != 1.0 {
            b = b.scale_real(scale);
        }
        dilations.push(HermitianMatrix::symmetrize(&b));
    }
    let k = spec.total();
    let embedding = block_embed_isometry(k, 0, d)?;
    MonotoneFamilyResult::certify(dilations, embedding, true, k, tol)
}

/// Monotone hermitian family on `⊕^{2^n} H` totally dilating any hermitian
/// `A_0, …, A_n`.
///
/// Each member is moved into `[1/2, 1]` by `A ↦ αA + (3/4)I` with
/// `α = 1/(4‖A‖_F)`, dilated with all `k_j = 2`, and moved back.
pub fn hermitian_monotone_family(
    family: &[HermitianMatrix],
    tol: &TolerancePolicy,
) -> Result<MonotoneFamilyResult> {
    let d = require_same_dim(family)?;
    if family.len() == 1 {
        let embedding = block_embed_isometry(1, 0, d)?;
        return MonotoneFamilyResult::certify(family.to_vec(), embedding, true, 1, tol);
    }
    let shift = |alpha: f64, m: &Matrix| {
        &m.scale_real(alpha) + &Matrix::identity(m.rows()).scale_real(0.75)
    };
    let alphas: Vec<f64> = family
        .iter()
        .map(|a| {
            let norm = a.frobenius_norm();
            if norm == 0.0 {
                1.0
            } else {
                1.0 / (4.0 * norm)
            }
        })
        .collect();
    let shifted: Vec<HermitianMatrix> = family
        .iter()
        .zip(&alphas)
        .map(|(a, &alpha)| HermitianMatrix::symmetrize(&shift(alpha, a)))
        .collect();
    let spec = ConditionSpec::uniform(2, family.len() - 1)?;
    let inner = monotone_family(&shifted, &spec, tol)?;
    let dilations = inner
        .dilations
        .iter()
        .zip(&alphas)
        .map(|(b, &alpha)| {
            let unshifted = (b.as_matrix() - &Matrix::identity(b.dim()).scale_real(0.75))
                .scale_real(1.0 / alpha);
            HermitianMatrix::symmetrize(&unshifted)
        })
        .collect();
    MonotoneFamilyResult::certify(dilations, inner.embedding, true, inner.blowup, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::Ensemble;
    use crate::verify::is_monotone_family;

    fn tol() -> TolerancePolicy {
        TolerancePolicy::default()
    }

    fn as_matrices(f: &[HermitianMatrix]) -> Vec<Matrix> {
        f.iter().map(|h| h.as_matrix().clone()).collect()
    }

    #[test]
    fn spec_products() {
        let s = ConditionSpec::new(vec![2, 3]).unwrap();
        assert_eq!((s.k_before(0), s.k(0), s.k_after(0)), (1, 1, 6));
        assert_eq!((s.k_before(1), s.k(1), s.k_after(1)), (1, 2, 3));
        assert_eq!((s.k_before(2), s.k(2), s.k_after(2)), (2, 3, 1));
        for j in 0..=2 {
            assert_eq!(s.k_before(j) * s.k(j) * s.k_after(j), s.total());
        }
        assert!(ConditionSpec::new(vec![0]).is_err());
    }

    #[test]
    fn pair_of_ones() {
        let one = HermitianMatrix::identity(1);
        let r = monotone_pair(&one, &one, 2, &tol()).unwrap();
        assert_eq!(
            r.dilations[0].as_matrix(),
            &Matrix::from_real(2, 2, &[1.0; 4])
        );
        assert_eq!(r.dilations[1].as_matrix(), &Matrix::identity(2));
    }

    #[test]
    fn pair_diagonal() {
        let a = HermitianMatrix::diag(&[1.0, 2.0]);
        let b = HermitianMatrix::diag(&[1.0, 0.5]);
        let r = monotone_pair(&a, &b, 2, &tol()).unwrap();
        assert_eq!(r.certificate.values[0].len(), 4);
        assert!(
            r.verify(&[a.into_matrix(), b.into_matrix()], &tol())
                .unwrap()
                .passed
        );
    }

    #[test]
    fn pair_rejects_small_b() {
        let a = HermitianMatrix::identity(2);
        let b = HermitianMatrix::diag(&[1.0, 0.3]);
        assert!(monotone_pair(&a, &b, 2, &tol())
            .unwrap_err()
            .is_precondition());
        let b_ok = HermitianMatrix::diag(&[1.0, 0.34]);
        assert!(monotone_pair(&a, &b_ok, 3, &tol()).is_ok());
    }

    #[test]
    fn family_reduces_to_pair() {
        let mut ens = Ensemble::new(41);
        let a = ens.positive(3);
        let b = ens.with_spectrum(&[1.0, 0.7, 0.5]);
        let p = monotone_pair(&a, &b, 2, &tol()).unwrap();
        let f = monotone_family(&[a, b], &ConditionSpec::uniform(2, 1).unwrap(), &tol()).unwrap();
        assert_eq!(p.dilations, f.dilations);
    }

    #[test]
    fn scalar_family_by_hand() {
        let fam: Vec<HermitianMatrix> = [1.0, 0.6, 0.75]
            .iter()
            .map(|&x| HermitianMatrix::diag(&[x]))
            .collect();
        let r = monotone_family(&fam, &ConditionSpec::uniform(2, 2).unwrap(), &tol()).unwrap();
        assert_eq!(r.blowup, 4);
        assert_eq!(
            r.dilations[0].as_matrix(),
            &Matrix::from_real(4, 4, &[1.0; 16])
        );
        // B_1 = [0.6]⟨2⟩[2]: bridge entries 0.6 / 0.4 repeated over a 2×2 ones pattern
        let b1 = r.dilations[1].as_matrix();
        assert!((b1[(0, 0)].re - 0.6).abs() < 1e-15 && (b1[(0, 1)].re - 0.4).abs() < 1e-15);
        assert!((b1[(0, 2)].re - 0.6).abs() < 1e-15);
        // B_2 = [0.75](2)⟨2⟩: diagonal 0.75, off-diagonal 0.25 on the matching slot
        let b2 = r.dilations[2].as_matrix();
        assert!((b2[(0, 0)].re - 0.75).abs() < 1e-15 && (b2[(0, 2)].re - 0.25).abs() < 1e-15);
        assert!(b2[(0, 1)].norm() < 1e-15);
        assert!(r.verify(&as_matrices(&fam), &tol()).unwrap().passed);
    }

    #[test]
    fn family_with_rescaling() {
        let mut ens = Ensemble::new(42);
        let fam = vec![
            ens.positive(2),
            ens.positive_with_cond(2, 2.0),
            ens.positive_with_cond(2, 1.5),
        ];
        let fam: Vec<HermitianMatrix> = fam
            .into_iter()
            .map(|h| HermitianMatrix::symmetrize(&h.scale_real(3.0)))
            .collect();
        let r = monotone_family(&fam, &ConditionSpec::uniform(2, 2).unwrap(), &tol()).unwrap();
        assert_eq!(r.dilations[0].dim(), 8);
        let rep = r.verify(&as_matrices(&fam), &tol()).unwrap();
        assert!(rep.passed, "{rep:?}");
    }

    #[test]
    fn family_names_bad_member() {
        let fam = vec![
            HermitianMatrix::identity(2),
            HermitianMatrix::diag(&[1.0, 0.1]),
        ];
        let e = monotone_family(&fam, &ConditionSpec::uniform(2, 1).unwrap(), &tol()).unwrap_err();
        assert!(e.is_precondition());
        assert!(e.to_string().contains("member 1"));
    }

    #[test]
    fn hermitian_family_cases() {
        let single = vec![HermitianMatrix::diag(&[1.0, -2.0])];
        let r = hermitian_monotone_family(&single, &tol()).unwrap();
        assert_eq!(r.blowup, 1);
        assert_eq!(r.dilations, single);

        let pair = vec![
            HermitianMatrix::diag(&[1.0, -1.0]),
            HermitianMatrix::diag(&[-5.0, 5.0]),
        ];
        let r = hermitian_monotone_family(&pair, &tol()).unwrap();
        assert_eq!(r.dilations[0].dim(), 4);
        assert!(r.verify(&as_matrices(&pair), &tol()).unwrap().passed);

        let mut ens = Ensemble::new(43);
        let three = vec![
            ens.hermitian(2),
            HermitianMatrix::symmetrize(&Matrix::zeros(2, 2)),
            ens.hermitian(2),
        ];
        let r = hermitian_monotone_family(&three, &tol()).unwrap();
        assert_eq!(r.blowup, 4);
        assert!(r.verify(&as_matrices(&three), &tol()).unwrap().passed);
        assert!(is_monotone_family(&r.dilations, &tol()).is_ok());
    }
}
