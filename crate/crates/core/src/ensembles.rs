//! Seeded random matrix ensembles used by tests, benchmarks and the CLI.
//!
//! Every generator draws from one ChaCha stream, so a seed fixes the whole
//! sequence of matrices bit for bit.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::numerics::basis::{dot, norm};
use crate::numerics::{HermitianMatrix, Matrix, UnitaryMatrix, C64};

pub struct Ensemble {
    rng: ChaCha8Rng,
}

impl Ensemble {
    pub fn new(seed: u64) -> Self {
        Ensemble {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.rng.random::<f64>()
    }

    pub fn int(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        self.rng.random_range(lo..=hi_inclusive)
    }

    pub fn gaussian(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    pub fn complex_scalar(&mut self) -> C64 {
        C64::new(self.gaussian(), self.gaussian())
    }

    /// Entries i.i.d. standard complex gaussian.
    pub fn complex(&mut self, n: usize) -> Matrix {
        Matrix::from_fn(n, n, |_, _| self.complex_scalar())
    }

    pub fn real(&mut self, n: usize) -> Matrix {
        Matrix::from_fn(n, n, |_, _| C64::new(self.gaussian(), 0.0))
    }

    pub fn hermitian(&mut self, n: usize) -> HermitianMatrix {
        HermitianMatrix::symmetrize(&self.complex(n))
    }

    /// Haar-like unitary from Gram–Schmidt on a gaussian matrix.
    pub fn unitary(&mut self, n: usize) -> UnitaryMatrix {
        let g = self.complex(n);
        let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = g.column(j);
            for _ in 0..2 {
                for b in &cols {
                    let c = dot(b, &v);
                    for (x, y) in v.iter_mut().zip(b) {
                        *x -= c * y;
                    }
                }
            }
            let r = norm(&v);
            cols.push(v.into_iter().map(|z| z / r).collect());
        }
        UnitaryMatrix::new_unchecked(Matrix::from_columns(n, &cols))
    }

    /// `U · diag(spectrum) · U*` for a random unitary `U`.
    pub fn with_spectrum(&mut self, spectrum: &[f64]) -> HermitianMatrix {
        let u = self.unitary(spectrum.len());
        conjugate_diag(&u, spectrum)
    }

    /// Positive definite with spectrum in `[1, cond]`, so its condition number is
    /// at most `cond`; the extreme eigenvalues are pinned to `1` and `cond` when
    /// `n ≥ 2`.
    pub fn positive_with_cond(&mut self, n: usize, cond: f64) -> HermitianMatrix {
        let spectrum = self.spectrum_in(n, 1.0, cond);
        self.with_spectrum(&spectrum)
    }

    /// Positive semidefinite with spectrum in `[0, 1)`.
    pub fn positive(&mut self, n: usize) -> HermitianMatrix {
        let spectrum: Vec<f64> = (0..n).map(|_| self.uniform(0.0, 1.0)).collect();
        self.with_spectrum(&spectrum)
    }

    /// Spectrum within `[lo, hi]`, both endpoints attained when `n ≥ 2`.
    pub fn spectrum_in(&mut self, n: usize, lo: f64, hi: f64) -> Vec<f64> {
        (0..n)
            .map(|i| match i {
                0 => hi,
                1 => lo,
                _ => self.uniform(lo, hi),
            })
            .collect()
    }

    /// Normal matrix `U · diag(z) · U*` with complex eigenvalues.
    pub fn normal(&mut self, n: usize) -> Matrix {
        let u = self.unitary(n);
        let z: Vec<C64> = (0..n).map(|_| self.complex_scalar()).collect();
        let uz = Matrix::from_fn(n, n, |i, j| u[(i, j)] * z[j]);
        &uz * &u.adjoint()
    }

    /// Contraction `U·diag(s)·W*` with singular values drawn from `[0, 1)`.
    pub fn contraction(&mut self, n: usize) -> Matrix {
        let u = self.unitary(n);
        let w = self.unitary(n);
        let s: Vec<f64> = (0..n).map(|_| self.uniform(0.0, 1.0)).collect();
        let us = Matrix::from_fn(n, n, |i, j| u[(i, j)] * s[j]);
        &us * &w.adjoint()
    }

    /// Real antisymmetric `G − Gᵀ`.
    pub fn antisymmetric_real(&mut self, n: usize) -> Matrix {
        let g = self.real(n);
        &g - &g.transpose()
    }

    /// Positive monotone pair: one random eigenbasis, both spectra non-increasing
    /// along it and non-negative.
    pub fn monotone_pair(&mut self, n: usize) -> (HermitianMatrix, HermitianMatrix) {
        let u = self.unitary(n);
        let a = self.sorted_spectrum(n, true);
        let b = self.sorted_spectrum(n, true);
        (conjugate_diag(&u, &a), conjugate_diag(&u, &b))
    }

    /// Positive antimonotone pair: second spectrum increases where the first decreases.
    pub fn antimonotone_pair(&mut self, n: usize) -> (HermitianMatrix, HermitianMatrix) {
        let u = self.unitary(n);
        let a = self.sorted_spectrum(n, true);
        let b = self.sorted_spectrum(n, false);
        (conjugate_diag(&u, &a), conjugate_diag(&u, &b))
    }

    fn sorted_spectrum(&mut self, n: usize, decreasing: bool) -> Vec<f64> {
        let mut s: Vec<f64> = (0..n).map(|_| self.uniform(0.05, 2.0)).collect();
        s.sort_by(f64::total_cmp);
        if decreasing {
            s.reverse();
        }
        s
    }

    /// Random orthonormal `n × m` frame (an isometry onto a random subspace).
    pub fn frame(&mut self, n: usize, m: usize) -> Matrix {
        self.unitary(n).block(0, 0, n, m)
    }
}

pub fn conjugate_diag(u: &Matrix, spectrum: &[f64]) -> HermitianMatrix {
    let n = spectrum.len();
    let us = Matrix::from_fn(n, n, |i, j| u[(i, j)] * spectrum[j]);
    HermitianMatrix::symmetrize(&(&us * &u.adjoint()))
}
