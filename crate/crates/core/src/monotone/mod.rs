//! Monotone dilations: commuting hermitian dilations whose joint eigenvalues
//! form a chain.

mod algorithmic;
mod economical;
mod kronecker;
mod numrange;

pub use algorithmic::{hermitian_monotone_family, monotone_family, monotone_pair, ConditionSpec};
pub use economical::{economical_monotone_family, essential_lift};
pub use kronecker::{check_bridge_commutation, dilate_bridge, dilate_diag, dilate_ones};
pub use numrange::{
    choose_triangle, numerical_range_pair, positive_commuting_lift, scalar_normal_dilation,
    Triangle,
};

use crate::error::{Error, Result};
use crate::numerics::{compress, HermitianMatrix, Isometry, Matrix};
use crate::tolerance::TolerancePolicy;
use crate::verify::{
    is_monotone_family, is_total_dilation, MonotoneCertificate, VerificationReport,
};

/// A monotone family on `F` and the shared embedding of `H` through which it
/// compresses to the inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneFamilyResult {
    pub dilations: Vec<HermitianMatrix>,
    pub embedding: Isometry,
    /// Whether every diagonal block (not just one compression) equals the input.
    pub total: bool,
    pub certificate: MonotoneCertificate,
    pub blowup: usize,
}

impl MonotoneFamilyResult {
    /// Certifies `dilations` and packages them; a family that fails the chain
    /// check is a verification error.
    pub(crate) fn certify(
        dilations: Vec<HermitianMatrix>,
        embedding: Isometry,
        total: bool,
        blowup: usize,
        tol: &TolerancePolicy,
    ) -> Result<Self> {
        let certificate = is_monotone_family(&dilations, tol)
            .map_err(|f| Error::Verification(format!("constructed family is not monotone: {f}")))?;
        Ok(MonotoneFamilyResult {
            dilations,
            embedding,
            total,
            certificate,
            blowup,
        })
    }

    /// Compressions against `family`, the certificate, and the block checks for
    /// total dilations.
    pub fn verify(&self, family: &[Matrix], tol: &TolerancePolicy) -> Result<VerificationReport> {
        if family.len() != self.dilations.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} inputs for {} dilations",
                family.len(),
                self.dilations.len()
            )));
        }
        let mut report = VerificationReport::new();
        for (j, (b, a)) in self.dilations.iter().zip(family).enumerate() {
            let c = compress(b, &self.embedding)?;
            report.push(
                format!("compression[{j}]"),
                c.distance(a)?,
                tol.eq_threshold(a.frobenius_norm()),
            );
            if self.total {
                report.merge(
                    &format!("total[{j}]."),
                    is_total_dilation(b, a, self.blowup, tol)?,
                );
            }
        }
        report.merge(
            "certificate.",
            self.certificate.validate(&self.dilations, tol),
        );
        Ok(report)
    }
}
