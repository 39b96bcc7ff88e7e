use super::TotalDilationResult;
use crate::error::{Error, Result};
use crate::numerics::{all_ones, kron, Matrix};

fn common_dim(family: &[Matrix]) -> Result<usize> {
    let first = family
        .first()
        .ok_or_else(|| Error::Precondition("family must not be empty".into()))?;
    let d = first.dim()?;
    for (j, a) in family.iter().enumerate() {
        if a.dim()? != d {
            return Err(Error::DimensionMismatch(format!(
                "member {j} is {}x{}, expected {d}x{d}",
                a.rows(),
                a.cols()
            )));
        }
    }
    Ok(d)
}

/// `N = [[A, A*], [A*, A]]`, normal for every square `A`.
pub fn normal_total_dilation(a: &Matrix) -> Result<TotalDilationResult> {
    a.dim()?;
    let swap = Matrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]);
    let n = &kron(a, &Matrix::identity(2)) + &kron(&a.adjoint(), &swap);
    Ok(TotalDilationResult::new(n, a.clone(), 2))
}

/// Block circulants `B_k`, block `(i, j)` equal to `A_{(k+i−j) mod n}`.
///
/// The `B_k` commute pairwise whatever the inputs, and `B_k` totally dilates `A_k`.
pub fn circulant_family_dilation(family: &[Matrix]) -> Result<Vec<TotalDilationResult>> {
    let d = common_dim(family)?;
    let n = family.len();
    Ok((0..n)
        .map(|k| {
            let b = Matrix::from_fn(n * d, n * d, |r, c| {
                let (i, j) = (r / d, c / d);
                family[(k + i + n - j) % n][(r % d, c % d)]
            });
            TotalDilationResult::new(b, family[k].clone(), n)
        })
        .collect())
}

/// Mutually annihilating total dilations `B_0, …, B_n` on `⊕^{2^n} H`.
///
/// Built one member at a time: earlier members are tensored with `[[1,1],[1,1]]`,
/// the new one (padded with an identity) with `[[1,−1],[−1,1]]`. Both factors are
/// positive, so positivity, hermitianity and normality carry over.
pub fn orthogonal_total_dilation(family: &[Matrix]) -> Result<Vec<TotalDilationResult>> {
    common_dim(family)?;
    let ones = all_ones(2)?;
    let signs = Matrix::from_real(2, 2, &[1.0, -1.0, -1.0, 1.0]);
    let mut current = vec![family[0].clone()];
    for (m, a) in family.iter().enumerate().skip(1) {
        let mut next: Vec<Matrix> = current.iter().map(|c| kron(c, &ones)).collect();
        let padded = kron(a, &Matrix::identity(1 << (m - 1)));
        next.push(kron(&padded, &signs));
        current = next;
    }
    let k = 1 << (family.len() - 1);
    Ok(current
        .into_iter()
        .zip(family)
        .map(|(b, a)| TotalDilationResult::new(b, a.clone(), k))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::Ensemble;
    use crate::numerics::HermitianMatrix;
    use crate::tolerance::TolerancePolicy;
    use crate::verify::{check_class, check_mutual_annihilation, OperatorClass};

    fn tol() -> TolerancePolicy {
        TolerancePolicy::default()
    }

    #[test]
    fn normal_dilation_of_nilpotent() {
        let a = Matrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        let r = normal_total_dilation(&a).unwrap();
        assert!(check_class(&r.dilation, OperatorClass::Normal, &tol()).passed);
        assert!(r.verify(&tol()).unwrap().passed);
        assert_eq!(r.dilation.block(0, 2, 2, 2), a.adjoint());
    }

    #[test]
    fn normal_dilation_random() {
        let mut ens = Ensemble::new(3);
        let a = ens.complex(4);
        let r = normal_total_dilation(&a).unwrap();
        let n = &r.dilation;
        let defect = (n * &n.adjoint()).distance(&(&n.adjoint() * n)).unwrap();
        assert!(defect < 1e-10);
        let h = ens.hermitian(3);
        let rh = normal_total_dilation(&h).unwrap();
        assert!(check_class(&rh.dilation, OperatorClass::Hermitian, &tol()).passed);
    }

    #[test]
    fn circulant_two_scalars() {
        let fam = [
            Matrix::from_real(1, 1, &[1.0]),
            Matrix::from_real(1, 1, &[0.0]),
        ];
        let r = circulant_family_dilation(&fam).unwrap();
        assert_eq!(r[0].dilation, Matrix::identity(2));
        assert_eq!(
            r[1].dilation,
            Matrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0])
        );
    }

    #[test]
    fn circulant_single_member() {
        let a = Matrix::from_real(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let r = circulant_family_dilation(std::slice::from_ref(&a)).unwrap();
        assert_eq!(r[0].dilation, a);
    }

    #[test]
    fn circulant_commutes() {
        let mut ens = Ensemble::new(4);
        let fam: Vec<Matrix> = (0..3).map(|_| ens.complex(2)).collect();
        assert!(fam[0].commutator(&fam[1]).unwrap().frobenius_norm() > 0.1);
        let r = circulant_family_dilation(&fam).unwrap();
        for i in 0..3 {
            assert!(r[i].verify(&tol()).unwrap().passed);
            for j in 0..3 {
                let c = r[i].dilation.commutator(&r[j].dilation).unwrap();
                assert!(c.frobenius_norm() < 1e-10);
            }
        }
    }

    #[test]
    fn orthogonal_pair_of_ones() {
        let one = Matrix::from_real(1, 1, &[1.0]);
        let r = orthogonal_total_dilation(&[one.clone(), one]).unwrap();
        assert_eq!(
            r[0].dilation,
            Matrix::from_real(2, 2, &[1.0, 1.0, 1.0, 1.0])
        );
        assert_eq!(
            r[1].dilation,
            Matrix::from_real(2, 2, &[1.0, -1.0, -1.0, 1.0])
        );
        let st = &r[0].dilation * &r[1].dilation;
        assert_eq!(st, Matrix::zeros(2, 2));
    }

    #[test]
    fn orthogonal_zero_member() {
        let r = orthogonal_total_dilation(&[Matrix::identity(1), Matrix::zeros(1, 1)]).unwrap();
        assert_eq!(r[1].dilation, Matrix::zeros(2, 2));
    }

    #[test]
    fn orthogonal_positive_three() {
        let mut ens = Ensemble::new(6);
        let fam: Vec<Matrix> = (0..3).map(|_| ens.positive(2).into_matrix()).collect();
        let r = orthogonal_total_dilation(&fam).unwrap();
        let bs: Vec<Matrix> = r.iter().map(|x| x.dilation.clone()).collect();
        assert_eq!(bs[0].rows(), 8);
        assert!(check_mutual_annihilation(&bs, &tol()).unwrap().passed);
        for x in &r {
            assert_eq!(x.k, 4);
            assert!(x.verify(&tol()).unwrap().passed);
            let h = HermitianMatrix::symmetrize(&x.dilation);
            assert!(crate::numerics::is_positive_semidefinite(&h, &tol()).unwrap());
        }
    }

    #[test]
    fn empty_and_mismatched() {
        assert!(circulant_family_dilation(&[])
            .unwrap_err()
            .is_precondition());
        let bad = [Matrix::identity(2), Matrix::identity(3)];
        assert!(orthogonal_total_dilation(&bad)
            .unwrap_err()
            .is_precondition());
    }
}
