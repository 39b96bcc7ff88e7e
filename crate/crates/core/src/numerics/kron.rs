//! Kronecker products, compressions and the canonical block embeddings.
//!
//! Dilation spaces are `⊕^k H = H ⊗ C^k`. Throughout the crate the block index
//! (the `C^k` factor) is the *outer* index of the flattened coordinates, so that
//! `kron(A, B)` is the block matrix whose `(p, q)` block is `B[p, q] · A`. With this
//! layout `kron(A, I_k)` is block diagonal with `k` copies of `A` and the `s`-th
//! summand of `⊕^k H` occupies rows `s·dim H .. (s+1)·dim H`.

use super::matrix::{Matrix, C64, ONE};
use super::types::Isometry;
use crate::error::{Error, Result};

/// `(A ⊗ B)[(i,p),(j,q)] = A[i,j] · B[p,q]`, flattened with `p, q` outer.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = Matrix::zeros(ar * br, ac * bc);
    for p in 0..br {
        for q in 0..bc {
            let s = b[(p, q)];
            if s == C64::new(0.0, 0.0) {
                continue;
            }
            for i in 0..ar {
                for j in 0..ac {
                    out[(p * ar + i, q * ac + j)] = a[(i, j)] * s;
                }
            }
        }
    }
    out
}

/// `E_k`, the `k × k` matrix of ones.
pub fn all_ones(k: usize) -> Result<Matrix> {
    if k < 1 {
        return Err(Error::Precondition("all-ones matrix needs k >= 1".into()));
    }
    Ok(Matrix::from_fn(k, k, |_, _| ONE))
}

/// `V* B V`.
pub fn compress(b: &Matrix, v: &Isometry) -> Result<Matrix> {
    if !b.is_square() || b.rows() != v.target_dim() {
        return Err(Error::DimensionMismatch(format!(
            "cannot compress a {}x{} matrix with an isometry into dimension {}",
            b.rows(),
            b.cols(),
            v.target_dim()
        )));
    }
    Ok(&(&v.adjoint() * b) * v.as_matrix())
}

/// Embedding of `H` (dimension `dim`) as the `slot`-th summand of `⊕^k H`.
pub fn block_embed_isometry(k: usize, slot: usize, dim: usize) -> Result<Isometry> {
    if dim == 0 || k == 0 {
        return Err(Error::Precondition(
            "block embedding needs k >= 1 and dim >= 1".into(),
        ));
    }
    if slot >= k {
        return Err(Error::Precondition(format!(
            "slot {slot} out of range for {k} blocks"
        )));
    }
    let mut v = Matrix::zeros(k * dim, dim);
    for i in 0..dim {
        v[(slot * dim + i, i)] = ONE;
    }
    Ok(Isometry::new_unchecked(v))
}

/// `(1/n) Tr A`.
pub fn normalized_trace(a: &Matrix) -> Result<C64> {
    let n = a.dim()?;
    Ok(a.trace() / n as f64)
}
