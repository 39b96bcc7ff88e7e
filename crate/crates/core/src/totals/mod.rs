//! Total dilations: operators on `⊕^k H` whose block diagonal repeats the
//! dilated operator.

mod canonical;
mod equal_diagonal;
mod families;
mod halving;
mod unitary;

pub use canonical::{antisymmetric_canonical, AntisymmetricCanonical};
pub use equal_diagonal::{equal_diagonal_unitary, zero_in_numerical_range_2x2};
pub use families::{circulant_family_dilation, normal_total_dilation, orthogonal_total_dilation};
pub use halving::{equal_singular_halving, halving_total_dilation, HalvingResult};
pub use unitary::{constant_diagonal_unitary, unitary_total_dilation};

use crate::error::Result;
use crate::numerics::{block_embed_isometry, compress, Isometry, Matrix};
use crate::tolerance::TolerancePolicy;
use crate::verify::{is_total_dilation, VerificationReport};

/// A dilation on `⊕^k H` of `base` together with the `k` slot embeddings of `H`.
#[derive(Debug, Clone, PartialEq)]
pub struct TotalDilationResult {
    pub dilation: Matrix,
    pub k: usize,
    pub base: Matrix,
    pub embeddings: Vec<Isometry>,
}

impl TotalDilationResult {
    pub(crate) fn new(dilation: Matrix, base: Matrix, k: usize) -> Self {
        let d = base.rows();
        let embeddings = (0..k)
            .map(|s| block_embed_isometry(k, s, d).expect("slot in range"))
            .collect();
        TotalDilationResult {
            dilation,
            k,
            base,
            embeddings,
        }
    }

    /// Block-diagonal check plus `V_s* B V_s = A` through every slot embedding.
    pub fn verify(&self, tol: &TolerancePolicy) -> Result<VerificationReport> {
        let mut report = is_total_dilation(&self.dilation, &self.base, self.k, tol)?;
        let threshold = tol.eq_threshold(self.base.frobenius_norm());
        for (s, v) in self.embeddings.iter().enumerate() {
            let c = compress(&self.dilation, v)?;
            report.push(
                format!("compression[{s}]"),
                c.distance(&self.base)?,
                threshold,
            );
        }
        Ok(report)
    }
}
