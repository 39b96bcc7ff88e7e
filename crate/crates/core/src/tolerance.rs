use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Comparison thresholds shared by every check in the crate.
///
/// Each threshold is relative: a test of the form `residual <= tol` is always
/// evaluated as `residual <= tol * max(1, scale)` where `scale` is the norm of
/// the operand being tested.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TolerancePolicy {
    /// Equality of matrices (blocks, compressions, unitarity).
    pub rel_eq: f64,
    /// Eigen/singular reconstruction residuals.
    pub eig_residual: f64,
    /// Slack allowed on positivity and spectral-bound tests.
    pub psd_slack: f64,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        TolerancePolicy {
            rel_eq: 1e-9,
            eig_residual: 1e-10,
            psd_slack: 1e-10,
        }
    }
}

impl TolerancePolicy {
    pub fn new(rel_eq: f64, eig_residual: f64, psd_slack: f64) -> Result<Self> {
        let policy = TolerancePolicy {
            rel_eq,
            eig_residual,
            psd_slack,
        };
        policy.validate()?;
        Ok(policy)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("rel_eq", self.rel_eq),
            ("eig_residual", self.eig_residual),
            ("psd_slack", self.psd_slack),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Precondition(format!(
                    "tolerance {name} must be finite and strictly positive, got {v}"
                )));
            }
        }
        Ok(())
    }

    /// `rel_eq * max(1, scale)`.
    pub fn eq_threshold(&self, scale: f64) -> f64 {
        self.rel_eq * scale.max(1.0)
    }

    pub fn eig_threshold(&self, scale: f64) -> f64 {
        self.eig_residual * scale.max(1.0)
    }

    pub fn psd_threshold(&self, scale: f64) -> f64 {
        self.psd_slack * scale.max(1.0)
    }
}
