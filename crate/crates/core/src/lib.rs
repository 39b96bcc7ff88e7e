//! Total dilations, monotone dilations and economical dilations of matrices,
//! each returned together with the data needed to check it independently.
//!
//! A dilation of `A` (on `H`) is an operator `B` on a larger space together with
//! an isometry `V` such that `V* B V = A`. A *total* dilation lives on `⊕^k H`
//! and repeats `A` along its whole block diagonal.
//!
//! * [`numerics`]: matrix type, Jacobi eigensolver, SVD/polar, Kronecker products,
//!   simultaneous diagonalization.
//! * [`totals`]: total dilations (normal, unitary, commuting circulant,
//!   mutually annihilating, equal-diagonal, halving).
//! * [`monotone`]: monotone dilations of positive and hermitian families.
//! * [`verify`]: certificates and reports that check all of the above.
//! * [`ensembles`]: seeded random test matrices.

pub mod ensembles;
pub mod error;
pub mod monotone;
pub mod numerics;
pub mod tolerance;
pub mod totals;
pub mod verify;

pub use error::{Error, Result};
pub use monotone::MonotoneFamilyResult;
pub use numerics::{HermitianMatrix, Isometry, Matrix, UnitaryMatrix, C64};
pub use tolerance::TolerancePolicy;
pub use totals::{HalvingResult, TotalDilationResult};
pub use verify::{MonotoneCertificate, VerificationReport};
