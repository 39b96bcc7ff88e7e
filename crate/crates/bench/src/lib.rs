//! Shared fixtures for the criterion benchmarks.

use totdil_core::ensembles::Ensemble;
use totdil_core::{HermitianMatrix, Matrix};

pub const SEED: u64 = 0x5eed;

pub fn complex_matrix(n: usize) -> Matrix {
    Ensemble::new(SEED).complex(n)
}

pub fn hermitian_family(members: usize, n: usize) -> Vec<HermitianMatrix> {
    let mut ens = Ensemble::new(SEED);
    (0..members).map(|_| ens.hermitian(n)).collect()
}
