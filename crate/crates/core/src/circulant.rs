//! The three circulant approximations of a Hermitian Toeplitz matrix and
//! their spectra.
//!
//! Each approximation is defined by a closed-form first row in the generating
//! coefficients, so construction is O(N); the spectrum is the DFT of that
//! row, O(N log N):
//!
//! * `fourier` — eigenvalues sample the partial Fourier sum `S_{N-1}(l/N)`.
//! * `strang` — keeps the central band of `H_N` and wraps it.
//! * `cesaro` — eigenvalues sample the Cesàro sum `sigma_N(l/N)`; this is
//!   also the Frobenius-closest circulant to `H_N` (Chan's preconditioner).

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::dft::dft_forward;
use crate::error::{Error, Result};
use crate::sequences::HermitianSequence;
use crate::toeplitz::{build_toeplitz, DenseHermitian, Spectrum};

/// Construction-time bound on conjugate-symmetry violation in a user row.
const ROW_HERMITIAN_TOLERANCE: f64 = 1e-12;

/// Relative imaginary residue tolerated when the DFT of a Hermitian-circulant
/// row is reduced to real eigenvalues.
pub const EIG_IMAG_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    Fourier,
    Strang,
    Cesaro,
}

impl Scheme {
    pub const ALL: [Scheme; 3] = [Scheme::Fourier, Scheme::Strang, Scheme::Cesaro];

    pub fn name(&self) -> &'static str {
        match self {
            Scheme::Fourier => "fourier",
            Scheme::Strang => "strang",
            Scheme::Cesaro => "cesaro",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First row of a Hermitian circulant matrix, tagged by scheme.
#[derive(Debug, Clone)]
pub struct CirculantRow {
    scheme: Scheme,
    row: Vec<Complex64>,
}

impl CirculantRow {
    /// Wrap an explicit row, validating the Hermitian-circulant symmetry
    /// `row[k] = conj(row[N-k])` and a real `row[0]`.
    pub fn new(scheme: Scheme, row: Vec<Complex64>) -> Result<Self> {
        if row.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = row.len();
        let mut residue = row[0].im.abs();
        for k in 1..n {
            residue = residue.max((row[k] - row[n - k].conj()).norm());
        }
        if residue > ROW_HERMITIAN_TOLERANCE {
            return Err(Error::NonHermitian {
                residue,
                threshold: ROW_HERMITIAN_TOLERANCE,
            });
        }
        Ok(Self { scheme, row })
    }

    fn from_parts(scheme: Scheme, row: Vec<Complex64>) -> Self {
        Self { scheme, row }
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn len(&self) -> usize {
        self.row.len()
    }

    pub fn is_empty(&self) -> bool {
        self.row.is_empty()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.row
    }

    /// Elementwise sum with another row of the same length.
    pub fn add(&self, other: &CirculantRow) -> Result<CirculantRow> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let row = self
            .row
            .iter()
            .zip(&other.row)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CirculantRow::from_parts(self.scheme, row))
    }

    /// Elementwise difference with another row of the same length.
    pub fn sub(&self, other: &CirculantRow) -> Result<CirculantRow> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let row = self
            .row
            .iter()
            .zip(&other.row)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CirculantRow::from_parts(self.scheme, row))
    }

    /// Dense matrix `C[m, n] = row[(n - m) mod N]`.
    pub fn densify(&self) -> Result<DenseHermitian> {
        let n = self.len();
        let mat = DMatrix::from_fn(n, n, |m, k| {
            let idx = (k + n - m) % n;
            self.row[idx]
        });
        DenseHermitian::from_matrix(mat)
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::validation("matrix size must be positive".to_string()));
    }
    Ok(())
}

/// Truncated-Fourier row: `c[0] = h[0]`, `c[k] = h[-k] + h[N-k]`.
pub fn fourier_row(seq: &HermitianSequence, n: usize) -> Result<CirculantRow> {
    check_size(n)?;
    let mut row = Vec::with_capacity(n);
    row.push(seq.coeff(0));
    for k in 1..n {
        row.push(seq.coeff(-(k as i64)) + seq.coeff((n - k) as i64));
    }
    Ok(CirculantRow::from_parts(Scheme::Fourier, row))
}

/// Strang row: keep `h[-k]` on the first half, wrap `h[N-k]` on the second,
/// zero at `k = N/2` for even N.
pub fn strang_row(seq: &HermitianSequence, n: usize) -> Result<CirculantRow> {
    check_size(n)?;
    let mut row = vec![Complex64::new(0.0, 0.0); n];
    for k in 0..=((n - 1) / 2) {
        row[k] = seq.coeff(-(k as i64));
    }
    for k in (n / 2 + 1)..n {
        row[k] = seq.coeff((n - k) as i64);
    }
    Ok(CirculantRow::from_parts(Scheme::Strang, row))
}

/// Cesàro (Chan) row: `c[k] = ((N-k) h[-k] + k h[N-k]) / N`, the
/// Frobenius-closest circulant to `H_N`.
pub fn cesaro_row(seq: &HermitianSequence, n: usize) -> Result<CirculantRow> {
    check_size(n)?;
    let nf = n as f64;
    let mut row = Vec::with_capacity(n);
    row.push(seq.coeff(0));
    for k in 1..n {
        let v = seq.coeff(-(k as i64)) * (nf - k as f64) + seq.coeff((n - k) as i64) * k as f64;
        row.push(v / nf);
    }
    Ok(CirculantRow::from_parts(Scheme::Cesaro, row))
}

/// Spectrum of a Hermitian circulant: the DFT of its first row, with the
/// imaginary residue checked against `EIG_IMAG_TOLERANCE * ||row||_1` and
/// then discarded.
pub fn circulant_eigs(row: &CirculantRow) -> Result<Spectrum> {
    let transformed = dft_forward(row.entries())?;
    let l1: f64 = row.entries().iter().map(|v| v.norm()).sum();
    let threshold = EIG_IMAG_TOLERANCE * l1;
    let residue = transformed
        .iter()
        .map(|v| v.im.abs())
        .fold(0.0f64, f64::max);
    if residue > threshold {
        return Err(Error::NonHermitian { residue, threshold });
    }
    Ok(Spectrum::from_values(
        transformed.iter().map(|v| v.re).collect(),
    ))
}

/// Frobenius distances `(||Cbar - H||_F, ||(Cbar + P) - H||_F)` for a
/// Hermitian-circulant perturbation `P`; the first never exceeds the second.
pub fn chan_optimality_gap(
    seq: &HermitianSequence,
    n: usize,
    perturbation: &CirculantRow,
) -> Result<(f64, f64)> {
    if perturbation.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: perturbation.len(),
        });
    }
    let h = build_toeplitz(seq, n)?;
    let chan = cesaro_row(seq, n)?;
    let base = chan.densify()?.frobenius_distance(&h)?;
    let perturbed = chan.add(perturbation)?.densify()?.frobenius_distance(&h)?;
    Ok((base, perturbed))
}
