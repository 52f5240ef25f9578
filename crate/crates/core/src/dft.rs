//! Discrete Fourier transform of arbitrary length.
//!
//! Forward transform is unnormalized, `X[l] = sum_n x[n] e^{-j 2 pi l n / N}`;
//! the inverse carries the 1/N factor. Every length N >= 1 is supported, not
//! only powers of two (rustfft falls back to mixed-radix/Bluestein plans).

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

/// Unnormalized forward DFT: `X[l] = sum_{n=0}^{N-1} x[n] e^{-j 2 pi l n / N}`.
pub fn dft_forward(x: &[Complex64]) -> Result<Vec<Complex64>> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut buf = x.to_vec();
    FftPlanner::new()
        .plan_fft_forward(buf.len())
        .process(&mut buf);
    Ok(buf)
}

/// Inverse DFT with 1/N normalization, so `dft_inverse(dft_forward(x)) == x`.
pub fn dft_inverse(x: &[Complex64]) -> Result<Vec<Complex64>> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = x.len();
    let mut buf = x.to_vec();
    FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    for v in &mut buf {
        *v *= scale;
    }
    Ok(buf)
}
