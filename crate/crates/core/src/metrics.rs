//! Eigenvalue-comparison machinery: sup errors after descending alignment,
//! equal-distribution statistics, CDFs, and the circulant-based condition
//! number estimate.

use crate::circulant::{cesaro_row, circulant_eigs, Scheme};
use crate::error::{Error, Result};
use crate::sequences::{HermitianSequence, SymbolSpec};
use crate::toeplitz::Spectrum;

/// Test function applied inside equal-distribution averages.
#[derive(Debug, Clone)]
pub enum TestFunction {
    Identity,
    Log,
    Power(f64),
    /// Piecewise-linear interpolation table of (x, y) points, x increasing.
    Table(Vec<(f64, f64)>),
}

impl TestFunction {
    pub fn eval(&self, x: f64) -> Result<f64> {
        match self {
            TestFunction::Identity => Ok(x),
            TestFunction::Log => {
                if x <= 0.0 {
                    Err(Error::domain(format!("log requires a positive argument, got {x}")))
                } else {
                    Ok(x.ln())
                }
            }
            TestFunction::Power(p) => Ok(x.powf(*p)),
            TestFunction::Table(pts) => {
                if pts.is_empty() {
                    return Err(Error::domain("empty interpolation table".to_string()));
                }
                if x <= pts[0].0 {
                    return Ok(pts[0].1);
                }
                if x >= pts[pts.len() - 1].0 {
                    return Ok(pts[pts.len() - 1].1);
                }
                let i = pts.partition_point(|&(px, _)| px < x);
                let (x0, y0) = pts[i - 1];
                let (x1, y1) = pts[i];
                Ok(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
            }
        }
    }
}

fn check_same_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::LengthMismatch { left: a, right: b });
    }
    Ok(())
}

/// `max_l |u_(l) - v_(l)|` over descending-aligned spectra.
pub fn sup_error(u: &Spectrum, v: &Spectrum) -> Result<f64> {
    Ok(per_index_errors(u, v)?.into_iter().fold(0.0, f64::max))
}

/// Per-index absolute gaps between descending-aligned spectra.
pub fn per_index_errors(u: &Spectrum, v: &Spectrum) -> Result<Vec<f64>> {
    check_same_len(u.len(), v.len())?;
    Ok((0..u.len())
        .map(|l| (u.nth_descending(l) - v.nth_descending(l)).abs())
        .collect())
}

/// Equal-distribution statistic `(1/N) sum_l (theta(u_(l)) - theta(v_(l)))`.
pub fn eq_dist_stat(u: &Spectrum, v: &Spectrum, theta: &TestFunction) -> Result<f64> {
    check_same_len(u.len(), v.len())?;
    let n = u.len() as f64;
    let mut total = 0.0;
    for l in 0..u.len() {
        total += theta.eval(u.nth_descending(l))? - theta.eval(v.nth_descending(l))?;
    }
    Ok(total / n)
}

/// Right-continuous step CDF.
#[derive(Debug, Clone)]
pub struct CdfCurve {
    /// Jump locations, strictly increasing.
    alphas: Vec<f64>,
    /// F(alpha) at and after each jump; last value is 1.
    values: Vec<f64>,
}

impl CdfCurve {
    pub fn from_samples(mut samples: Vec<f64>) -> Self {
        let n = samples.len();
        samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut alphas = Vec::new();
        let mut values = Vec::new();
        let mut count = 0usize;
        let mut i = 0;
        while i < n {
            let x = samples[i];
            while i < n && samples[i] == x {
                count += 1;
                i += 1;
            }
            alphas.push(x);
            values.push(count as f64 / n as f64);
        }
        Self { alphas, values }
    }

    pub fn eval(&self, alpha: f64) -> f64 {
        let idx = self.alphas.partition_point(|&a| a <= alpha);
        if idx == 0 {
            0.0
        } else {
            self.values[idx - 1]
        }
    }

    pub fn jump_points(&self) -> &[f64] {
        &self.alphas
    }

    pub fn step_values(&self) -> &[f64] {
        &self.values
    }

    /// Sup vertical distance from another CDF, probed at the jump points of
    /// both curves and just below each jump (where step CDFs can differ most).
    pub fn sup_gap(&self, other: &CdfCurve) -> f64 {
        let mut gap = 0.0f64;
        for &a in self.alphas.iter().chain(&other.alphas) {
            gap = gap.max((self.eval(a) - other.eval(a)).abs());
            let before = a - 1e-9 * a.abs().max(1.0);
            gap = gap.max((self.eval(before) - other.eval(before)).abs());
        }
        gap
    }
}

/// Riemann-sampled CDF of a symbol: midpoint samples `(i + 1/2)/grid` avoid
/// evaluating the built-in symbols exactly at their jump discontinuities.
pub fn symbol_cdf(sym: &SymbolSpec, grid: usize) -> Result<CdfCurve> {
    if grid < 2 {
        return Err(Error::domain("CDF grid must have at least 2 points".to_string()));
    }
    let samples: Vec<f64> = (0..grid)
        .map(|i| sym.eval((i as f64 + 0.5) / grid as f64))
        .collect();
    Ok(CdfCurve::from_samples(samples))
}

/// Exact step CDF of an eigenvalue multiset.
pub fn spectrum_cdf(s: &Spectrum) -> CdfCurve {
    CdfCurve::from_samples(s.values().to_vec())
}

/// Condition-number estimate from the Cesàro spectrum. Lemma-4 bracketing
/// keeps the Cesàro eigenvalues inside [lambda_min(H), lambda_max(H)], so the
/// estimate never exceeds the true condition number of a positive-definite H.
pub fn condition_estimate(seq: &HermitianSequence, n: usize) -> Result<f64> {
    let eigs = circulant_eigs(&cesaro_row(seq, n)?)?;
    let min = eigs.min();
    if min <= 0.0 {
        return Err(Error::NotPositiveDefinite { min_eig: min });
    }
    Ok(eigs.max() / min)
}

/// Sorting-lemma harness: sorting two sequences never magnifies their
/// elementwise sup distance.
pub fn sorted_alignment_check(u: &[f64], v: &[f64]) -> Result<bool> {
    check_same_len(u.len(), v.len())?;
    let unsorted = u
        .iter()
        .zip(v)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let sorted = sup_error(
        &Spectrum::from_values(u.to_vec()),
        &Spectrum::from_values(v.to_vec()),
    )?;
    Ok(sorted <= unsorted + 1e-15)
}

/// Per-(N, scheme) comparison of a circulant spectrum against the exact one.
#[derive(Debug, Clone)]
pub struct ErrorReport {
    pub n: usize,
    pub scheme: Scheme,
    pub sup_error: f64,
    pub per_index_errors: Vec<f64>,
    /// (|largest-eigenvalue gap|, |smallest-eigenvalue gap|)
    pub extreme_errors: (f64, f64),
    /// Equal-distribution statistic with the identity test function.
    pub eq_dist_stat: f64,
}

pub fn error_report(exact: &Spectrum, approx: &Spectrum, scheme: Scheme) -> Result<ErrorReport> {
    let per_index = per_index_errors(exact, approx)?;
    let sup = per_index.iter().copied().fold(0.0, f64::max);
    let stat = eq_dist_stat(exact, approx, &TestFunction::Identity)?;
    let extremes = (
        (exact.max() - approx.max()).abs(),
        (exact.min() - approx.min()).abs(),
    );
    Ok(ErrorReport {
        n: exact.len(),
        scheme,
        sup_error: sup,
        per_index_errors: per_index,
        extreme_errors: extremes,
        eq_dist_stat: stat,
    })
}
