//! Dense Hermitian Toeplitz matrices, fast matvec, and the exact
//! eigensolver used as ground truth.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::dft::{dft_forward, dft_inverse};
use crate::error::{Error, Result};
use crate::sequences::HermitianSequence;

/// Largest stored deviation from conjugate symmetry tolerated by `exact_eigs`.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

/// A dense Hermitian matrix with conjugate symmetry enforced at the API edge.
#[derive(Debug, Clone)]
pub struct DenseHermitian {
    mat: DMatrix<Complex64>,
}

impl DenseHermitian {
    /// Wrap a dense matrix, rejecting storage whose Hermitian asymmetry
    /// exceeds `HERMITIAN_TOLERANCE` rather than symmetrizing silently.
    pub fn from_matrix(mat: DMatrix<Complex64>) -> Result<Self> {
        if mat.nrows() == 0 || mat.nrows() != mat.ncols() {
            return Err(Error::validation(format!(
                "expected a square non-empty matrix, got {}x{}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        let residue = hermitian_residue(&mat);
        if residue > HERMITIAN_TOLERANCE {
            return Err(Error::NonHermitian {
                residue,
                threshold: HERMITIAN_TOLERANCE,
            });
        }
        Ok(Self { mat })
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn entry(&self, m: usize, n: usize) -> Complex64 {
        self.mat[(m, n)]
    }

    pub fn as_matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    /// Principal submatrix deleting the last row and column.
    pub fn leading_principal(&self) -> Result<DenseHermitian> {
        if self.dim() < 2 {
            return Err(Error::validation(
                "cannot delete a row/column of a 1x1 matrix".to_string(),
            ));
        }
        let n = self.dim() - 1;
        Ok(DenseHermitian {
            mat: self.mat.view((0, 0), (n, n)).into_owned(),
        })
    }

    /// Frobenius distance to another matrix of the same size.
    pub fn frobenius_distance(&self, other: &DenseHermitian) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::LengthMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok((&self.mat - &other.mat).norm())
    }
}

fn hermitian_residue(mat: &DMatrix<Complex64>) -> f64 {
    let n = mat.nrows();
    let mut worst = 0.0f64;
    for m in 0..n {
        for k in m..n {
            worst = worst.max((mat[(m, k)] - mat[(k, m)].conj()).norm());
        }
    }
    worst
}

/// Eigenvalue multiset with a stable descending sort permutation.
#[derive(Debug, Clone)]
pub struct Spectrum {
    values: Vec<f64>,
    order: Vec<usize>,
}

impl Spectrum {
    /// Keep `values` in their natural order (DFT index, solver output, ...)
    /// and record the descending permutation; ties keep the lower index first.
    pub fn from_values(values: Vec<f64>) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap());
        Self { values, order }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Values in their natural (unsorted) order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The permutation rho with `values[rho(0)] >= ... >= values[rho(N-1)]`.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// l-th largest eigenvalue.
    pub fn nth_descending(&self, l: usize) -> f64 {
        self.values[self.order[l]]
    }

    pub fn descending(&self) -> Vec<f64> {
        self.order.iter().map(|&i| self.values[i]).collect()
    }

    pub fn max(&self) -> f64 {
        self.nth_descending(0)
    }

    pub fn min(&self) -> f64 {
        self.nth_descending(self.len() - 1)
    }
}

/// Dense `H_N[m, n] = h[m - n]`.
pub fn build_toeplitz(seq: &HermitianSequence, n: usize) -> Result<DenseHermitian> {
    if n == 0 {
        return Err(Error::validation("matrix size must be positive".to_string()));
    }
    let mat = DMatrix::from_fn(n, n, |m, k| seq.coeff(m as i64 - k as i64));
    // Entries come from conjugate pairs of the same stored coefficient, so the
    // symmetry is exact; from_matrix re-checks it anyway.
    DenseHermitian::from_matrix(mat)
}

/// `H_N x` in O(N log N) by embedding `H_N` into a (2N-1)x(2N-1) circulant.
pub fn toeplitz_matvec(
    seq: &HermitianSequence,
    n: usize,
    x: &[Complex64],
) -> Result<Vec<Complex64>> {
    if n == 0 {
        return Err(Error::validation("matrix size must be positive".to_string()));
    }
    if x.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: x.len(),
        });
    }
    let m = 2 * n - 1;
    // First column of the embedding circulant: c[k] = h[k] for k < N,
    // c[M - k] = h[-k] for 1 <= k < N.
    let mut col = vec![Complex64::new(0.0, 0.0); m];
    for k in 0..n {
        col[k] = seq.coeff(k as i64);
    }
    for k in 1..n {
        col[m - k] = seq.coeff(-(k as i64));
    }
    let mut padded = vec![Complex64::new(0.0, 0.0); m];
    padded[..n].copy_from_slice(x);

    let fc = dft_forward(&col)?;
    let fx = dft_forward(&padded)?;
    let prod: Vec<Complex64> = fc.iter().zip(&fx).map(|(a, b)| a * b).collect();
    let full = dft_inverse(&prod)?;
    Ok(full[..n].to_vec())
}

/// Exact real eigenvalues of a Hermitian matrix (ground-truth oracle).
pub fn exact_eigs(a: &DenseHermitian) -> Result<Spectrum> {
    // DenseHermitian construction already enforces the symmetry bound.
    let values: Vec<f64> = a
        .as_matrix()
        .clone()
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .collect();
    Ok(Spectrum::from_values(values))
}
