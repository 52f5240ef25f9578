//! Generating sequences `h[k]`, their symbols, and Fourier-series machinery.
//!
//! A Hermitian sequence stores `h[k]` for `k >= 0` only; `h[-k] = conj(h[k])`
//! is implied. The built-in symbol families materialize coefficients on
//! demand for a given matrix size, truncated at `|k| <= N - 1` (the only
//! coefficients the circulant constructions consume).

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const COEFF_FILE_HEADER: &str = "#toeplitz-coeffs v1";

/// How fast `h[k]` decays; governs which convergence guarantees apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecayClass {
    /// `h[k] = 0` for `k > r`.
    Banded(usize),
    AbsolutelySummable,
    SquareSummable,
    Unknown,
}

/// Generating coefficients of a Hermitian Toeplitz matrix, `k >= 0` side only.
#[derive(Debug, Clone)]
pub struct HermitianSequence {
    coeffs: BTreeMap<usize, Complex64>,
    decay: DecayClass,
}

impl HermitianSequence {
    pub fn new(coeffs: BTreeMap<usize, Complex64>, decay: DecayClass) -> Result<Self> {
        if let Some(h0) = coeffs.get(&0) {
            if h0.im != 0.0 {
                return Err(Error::validation(format!(
                    "h[0] must be real for a Hermitian symbol, got imaginary part {}",
                    h0.im
                )));
            }
        }
        if let DecayClass::Banded(r) = decay {
            if let Some((&k, _)) = coeffs.iter().rev().find(|(_, v)| v.norm() != 0.0) {
                if k > r {
                    return Err(Error::validation(format!(
                        "banded({r}) sequence has nonzero h[{k}]"
                    )));
                }
            }
        }
        Ok(Self { coeffs, decay })
    }

    /// Banded sequence from real coefficients `(k, h[k])`.
    pub fn banded_real(pairs: &[(usize, f64)]) -> Result<Self> {
        let coeffs: BTreeMap<usize, Complex64> = pairs
            .iter()
            .map(|&(k, v)| (k, Complex64::new(v, 0.0)))
            .collect();
        let r = coeffs.keys().next_back().copied().unwrap_or(0);
        Self::new(coeffs, DecayClass::Banded(r))
    }

    /// Banded sequence from complex coefficients `(k, h[k])`.
    pub fn banded(pairs: &[(usize, Complex64)]) -> Result<Self> {
        let coeffs: BTreeMap<usize, Complex64> = pairs.iter().copied().collect();
        let r = coeffs.keys().next_back().copied().unwrap_or(0);
        Self::new(coeffs, DecayClass::Banded(r))
    }

    /// `h[k]` for any integer `k`, applying `h[-k] = conj(h[k])`.
    pub fn coeff(&self, k: i64) -> Complex64 {
        let v = self
            .coeffs
            .get(&(k.unsigned_abs() as usize))
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0));
        if k < 0 {
            v.conj()
        } else {
            v
        }
    }

    pub fn decay_class(&self) -> DecayClass {
        self.decay
    }

    /// Largest stored index (coefficients beyond it are zero).
    pub fn support(&self) -> usize {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    /// Band radius if this sequence is known banded.
    pub fn band_radius(&self) -> Option<usize> {
        match self.decay {
            DecayClass::Banded(r) => Some(r),
            _ => None,
        }
    }

    /// Parse the `#toeplitz-coeffs v1` text format: one `<k> <re> <im>` line
    /// per stored coefficient, k strictly increasing, missing k meaning zero.
    pub fn parse_coeff_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        match lines.next() {
            Some(h) if h.trim() == COEFF_FILE_HEADER => {}
            _ => {
                return Err(Error::validation(format!(
                    "missing coefficient file header `{COEFF_FILE_HEADER}`"
                )))
            }
        }
        let mut coeffs = BTreeMap::new();
        let mut last_k: Option<usize> = None;
        for (idx, line) in lines.enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse = |field: Option<&str>, what: &str| -> Result<f64> {
                field
                    .ok_or_else(|| {
                        Error::validation(format!("line {}: missing {what}", idx + 2))
                    })?
                    .parse::<f64>()
                    .map_err(|e| Error::validation(format!("line {}: {what}: {e}", idx + 2)))
            };
            let k = parts
                .next()
                .ok_or_else(|| Error::validation(format!("line {}: empty", idx + 2)))?
                .parse::<usize>()
                .map_err(|e| Error::validation(format!("line {}: index: {e}", idx + 2)))?;
            let re = parse(parts.next(), "real part")?;
            let im = parse(parts.next(), "imaginary part")?;
            if parts.next().is_some() {
                return Err(Error::validation(format!(
                    "line {}: trailing fields",
                    idx + 2
                )));
            }
            if let Some(prev) = last_k {
                if k <= prev {
                    return Err(Error::validation(format!(
                        "line {}: k values must be strictly increasing ({k} after {prev})",
                        idx + 2
                    )));
                }
            }
            if k == 0 && im != 0.0 {
                return Err(Error::validation(
                    "h[0] must be real in a coefficient file".to_string(),
                ));
            }
            last_k = Some(k);
            coeffs.insert(k, Complex64::new(re, im));
        }
        Self::new(coeffs, DecayClass::Unknown)
    }

    pub fn from_coeff_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse_coeff_text(&text)
    }

    /// Serialize in the coefficient file format (shortest round-trip floats).
    pub fn to_coeff_text(&self) -> String {
        let mut out = String::from(COEFF_FILE_HEADER);
        out.push('\n');
        for (k, v) in &self.coeffs {
            out.push_str(&format!("{} {} {}\n", k, v.re, v.im));
        }
        out
    }
}

/// Built-in symbol families with analytically known coefficients and range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SymbolFamily {
    Constant(f64),
    Triangular { w: f64 },
    Sawtooth,
    RectWindow { w: f64 },
}

impl SymbolFamily {
    fn validate(&self) -> Result<()> {
        match *self {
            SymbolFamily::Triangular { w } | SymbolFamily::RectWindow { w } => {
                if !(w > 0.0 && w < 0.5) {
                    return Err(Error::domain(format!(
                        "window parameter W must satisfy 0 < W < 1/2, got {w}"
                    )));
                }
            }
            SymbolFamily::Constant(c) => {
                if !c.is_finite() {
                    return Err(Error::domain("constant symbol must be finite".to_string()));
                }
            }
            SymbolFamily::Sawtooth => {}
        }
        Ok(())
    }

    /// Coefficients `h[k]` for `|k| <= n - 1`, the truncation consumed by the
    /// size-`n` circulant constructions.
    pub fn sequence(&self, n: usize) -> Result<HermitianSequence> {
        self.validate()?;
        if n == 0 {
            return Err(Error::domain("matrix size must be positive".to_string()));
        }
        match *self {
            SymbolFamily::Constant(c) => HermitianSequence::banded_real(&[(0, c)]),
            SymbolFamily::Triangular { w } => {
                // Fejér-kernel coefficients normalized so the series sums to a
                // unit-peak triangle: h[0] = W, h[k] = (1/W)(sin(pi W k)/(pi k))^2.
                let mut coeffs = BTreeMap::new();
                coeffs.insert(0, Complex64::new(w, 0.0));
                for k in 1..n {
                    let s = (PI * w * k as f64).sin() / (PI * k as f64);
                    coeffs.insert(k, Complex64::new(s * s / w, 0.0));
                }
                HermitianSequence::new(coeffs, DecayClass::AbsolutelySummable)
            }
            SymbolFamily::Sawtooth => {
                // h[k] = (1 + (-1)^k) / (j 2 pi k): zero at odd k, -j/(pi k) at
                // even k; the DC term is the symbol mean 1/2.
                let mut coeffs = BTreeMap::new();
                coeffs.insert(0, Complex64::new(0.5, 0.0));
                for k in (2..n).step_by(2) {
                    coeffs.insert(k, Complex64::new(0.0, -1.0 / (PI * k as f64)));
                }
                HermitianSequence::new(coeffs, DecayClass::SquareSummable)
            }
            SymbolFamily::RectWindow { w } => {
                // h[k] = sin(2 pi W k)/(pi k); the DC term is the window area 2W.
                let mut coeffs = BTreeMap::new();
                coeffs.insert(0, Complex64::new(2.0 * w, 0.0));
                for k in 1..n {
                    coeffs.insert(
                        k,
                        Complex64::new((2.0 * PI * w * k as f64).sin() / (PI * k as f64), 0.0),
                    );
                }
                HermitianSequence::new(coeffs, DecayClass::SquareSummable)
            }
        }
    }

    pub fn spec(&self) -> Result<SymbolSpec> {
        self.validate()?;
        let (ess_sup, ess_inf, connected) = match *self {
            SymbolFamily::Constant(c) => (c, c, true),
            SymbolFamily::Triangular { .. } => (1.0, 0.0, true),
            SymbolFamily::Sawtooth => (1.0, 0.0, true),
            SymbolFamily::RectWindow { .. } => (1.0, 0.0, false),
        };
        Ok(SymbolSpec {
            family: *self,
            ess_sup,
            ess_inf,
            connected_range: connected,
        })
    }

    pub fn all_names() -> &'static [&'static str] {
        &["constant:c", "triangular:W", "sawtooth", "rect_window:W"]
    }

    /// Parse CLI syntax like `triangular:0.25`, `sawtooth`, `constant:3`.
    pub fn parse(text: &str) -> Result<Self> {
        let (name, param) = match text.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (text, None),
        };
        let need = |what: &str| -> Result<f64> {
            param
                .ok_or_else(|| Error::validation(format!("symbol `{name}` requires {what}")))?
                .parse::<f64>()
                .map_err(|e| Error::validation(format!("symbol `{name}`: {e}")))
        };
        match name {
            "constant" => Ok(SymbolFamily::Constant(need("a value, e.g. constant:3")?)),
            "triangular" => Ok(SymbolFamily::Triangular {
                w: need("a width, e.g. triangular:0.25")?,
            }),
            "sawtooth" => {
                if param.is_some() {
                    return Err(Error::validation("sawtooth takes no parameter".to_string()));
                }
                Ok(SymbolFamily::Sawtooth)
            }
            "rect_window" => Ok(SymbolFamily::RectWindow {
                w: need("a width, e.g. rect_window:0.25")?,
            }),
            other => Err(Error::validation(format!("unknown symbol family `{other}`"))),
        }
    }
}

impl fmt::Display for SymbolFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SymbolFamily::Constant(c) => write!(f, "constant:{c}"),
            SymbolFamily::Triangular { w } => write!(f, "triangular:{w}"),
            SymbolFamily::Sawtooth => write!(f, "sawtooth"),
            SymbolFamily::RectWindow { w } => write!(f, "rect_window:{w}"),
        }
    }
}

/// An evaluable symbol on [0, 1] with known essential range.
#[derive(Debug, Clone)]
pub struct SymbolSpec {
    pub family: SymbolFamily,
    pub ess_sup: f64,
    pub ess_inf: f64,
    pub connected_range: bool,
}

impl SymbolSpec {
    pub fn eval(&self, f: f64) -> f64 {
        match self.family {
            SymbolFamily::Constant(c) => c,
            SymbolFamily::Triangular { w } => {
                if f <= w {
                    1.0 - f / w
                } else if f >= 1.0 - w {
                    1.0 - (1.0 - f) / w
                } else {
                    0.0
                }
            }
            SymbolFamily::Sawtooth => {
                if f <= 0.5 {
                    2.0 * f
                } else {
                    2.0 * f - 1.0
                }
            }
            SymbolFamily::RectWindow { w } => {
                if f > w && f <= 1.0 - w {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }
}

/// Matched sequence/symbol pair for a built-in family, with coefficients
/// truncated for matrices of size `n`.
pub fn make_symbol(family: SymbolFamily, n: usize) -> Result<(HermitianSequence, SymbolSpec)> {
    Ok((family.sequence(n)?, family.spec()?))
}

fn check_unit_interval(f: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&f) {
        return Err(Error::domain(format!("frequency {f} outside [0, 1]")));
    }
    Ok(())
}

/// Partial Fourier sum `S_n(f) = sum_{k=-n}^{n} h[k] e^{j 2 pi f k}`.
///
/// The assembled sum is real up to rounding for Hermitian coefficients; the
/// imaginary residue is checked before discarding.
pub fn partial_fourier_sum(seq: &HermitianSequence, n: usize, f: f64) -> Result<f64> {
    check_unit_interval(f)?;
    let mut sum = seq.coeff(0);
    let kmax = n.min(seq.support());
    for k in 1..=kmax {
        let phase = Complex64::from_polar(1.0, 2.0 * PI * f * k as f64);
        sum += seq.coeff(k as i64) * phase + seq.coeff(-(k as i64)) * phase.conj();
    }
    debug_assert!(sum.im.abs() <= 1e-10 * sum.re.abs().max(1.0));
    Ok(sum.re)
}

/// Cesàro sum `sigma_N(f) = (1/N) sum_{n=0}^{N-1} S_n(f)`, evaluated through
/// the equivalent Fejér weighting `sum (1 - |k|/N) h[k] e^{j 2 pi f k}`.
pub fn cesaro_sum(seq: &HermitianSequence, n: usize, f: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("Cesàro sum requires N >= 1".to_string()));
    }
    check_unit_interval(f)?;
    let mut sum = seq.coeff(0);
    let kmax = (n - 1).min(seq.support());
    for k in 1..=kmax {
        let weight = 1.0 - k as f64 / n as f64;
        let phase = Complex64::from_polar(1.0, 2.0 * PI * f * k as f64);
        sum += (seq.coeff(k as i64) * phase + seq.coeff(-(k as i64)) * phase.conj()) * weight;
    }
    debug_assert!(sum.im.abs() <= 1e-10 * sum.re.abs().max(1.0));
    Ok(sum.re)
}

/// Dirichlet kernel `D_N(f) = sin(pi N f) / sin(pi f)`, with the removable
/// singularities at f = 0 and f = 1 evaluated by limit.
pub fn dirichlet(n: usize, f: f64) -> f64 {
    let nf = n as f64;
    if f.abs() < 1e-12 {
        return nf;
    }
    if (1.0 - f).abs() < 1e-12 {
        // limit from sin(pi N f)/sin(pi f) as f -> 1 is N (-1)^{N+1}
        return if n % 2 == 0 { -nf } else { nf };
    }
    (PI * nf * f).sin() / (PI * f).sin()
}

/// Composite-midpoint quadrature of `int_a^b |D_N(f)|^2 df`.
pub fn dirichlet_energy(n: usize, a: f64, b: f64, grid: usize) -> Result<f64> {
    if a >= b {
        return Err(Error::domain(format!(
            "integration bounds must satisfy a < b, got [{a}, {b}]"
        )));
    }
    if a < 0.0 || b > 1.0 {
        return Err(Error::domain(format!(
            "integration bounds [{a}, {b}] outside [0, 1]"
        )));
    }
    if grid == 0 {
        return Err(Error::domain("quadrature grid must be positive".to_string()));
    }
    let h = (b - a) / grid as f64;
    let mut total = 0.0;
    for i in 0..grid {
        let f = a + (i as f64 + 0.5) * h;
        let d = dirichlet(n, f);
        total += d * d;
    }
    Ok(total * h)
}
