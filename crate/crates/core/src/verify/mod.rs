//! Independent checks of the constructions: total-dilation structure, monotone
//! and antimonotone certificates, operator classes, mutual annihilation and the
//! compression inequalities for monotone pairs.
//!
//! Nothing here calls into the constructors; a check only looks at the matrices
//! it is handed.

pub mod checks;
pub mod inequalities;
pub mod monotone;
pub mod report;

pub use checks::{check_class, check_mutual_annihilation, is_total_dilation, OperatorClass};
pub use inequalities::{check_antimonotone_det_reversal, check_compression_inequalities};
pub use monotone::{
    is_antimonotone_pair, is_monotone_family, monotone_report, MonotoneCertificate, MonotoneFailure,
};
pub use report::{Check, VerificationReport};
