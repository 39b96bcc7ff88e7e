use serde::{Deserialize, Serialize};

/// One named residual compared against its threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub threshold: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.residual <= self.threshold
    }
}

/// Outcome of a verification: passes iff every residual is within its threshold.
///
/// Serializes as `{"passed": bool, "checks": [{name, residual, threshold}], "worst": name}`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub checks: Vec<Check>,
    pub worst: Option<String>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport {
            passed: true,
            checks: Vec::new(),
            worst: None,
        }
    }

    pub fn push(&mut self, name: impl Into<String>, residual: f64, threshold: f64) -> &mut Self {
        // NaN residuals must fail.
        let residual = if residual.is_nan() {
            f64::INFINITY
        } else {
            residual
        };
        self.checks.push(Check {
            name: name.into(),
            residual,
            threshold,
        });
        self.refresh();
        self
    }

    /// A check that is either satisfied (residual 0) or not (residual 1).
    pub fn push_flag(&mut self, name: impl Into<String>, ok: bool) -> &mut Self {
        self.push(name, if ok { 0.0 } else { 1.0 }, 0.0)
    }

    /// Appends all checks of `other`, prefixing their names.
    pub fn merge(&mut self, prefix: &str, other: VerificationReport) -> &mut Self {
        for c in other.checks {
            self.checks.push(Check {
                name: format!("{prefix}{}", c.name),
                ..c
            });
        }
        self.refresh();
        self
    }

    fn refresh(&mut self) {
        self.passed = self.checks.iter().all(Check::passed);
        // worst = largest excess over threshold, relative where the threshold allows
        self.worst = self
            .checks
            .iter()
            .max_by(|a, b| excess(a).total_cmp(&excess(b)))
            .map(|c| c.name.clone());
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn excess(c: &Check) -> f64 {
    if c.threshold > 0.0 {
        c.residual / c.threshold
    } else {
        c.residual - c.threshold
    }
}
