//! Fast eigenvalue estimation for Hermitian Toeplitz matrices.
//!
//! A Hermitian Toeplitz matrix `H_N[m, n] = h[m - n]` can be approximated by
//! circulant matrices whose first rows have closed forms in the generating
//! coefficients `h[k]`. Since a circulant is diagonalized by the DFT, its
//! full spectrum costs O(N log N) instead of the O(N^3) of a dense
//! eigensolve. This crate builds the three classical approximations
//! (truncated-Fourier, Strang, and Cesàro/Chan rows), extracts their spectra,
//! and provides the dense ground-truth oracle plus the error metrics needed
//! to study how well the circulant spectra track the Toeplitz one.

pub mod circulant;
pub mod dft;
pub mod error;
pub mod metrics;
pub mod sequences;
pub mod toeplitz;

pub use circulant::{cesaro_row, circulant_eigs, fourier_row, strang_row, CirculantRow, Scheme};
pub use error::{Error, Result};
pub use metrics::{ErrorReport, TestFunction};
pub use sequences::{HermitianSequence, SymbolFamily, SymbolSpec};
pub use toeplitz::{build_toeplitz, exact_eigs, toeplitz_matvec, DenseHermitian, Spectrum};
