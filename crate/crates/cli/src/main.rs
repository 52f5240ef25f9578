//! Command-line front end: eigenvalue estimation, convergence sweeps,
//! condition-number estimates, and Dirichlet-kernel energy checks, emitting
//! CSV for external plotting.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use toeplitz_spectra::circulant::{cesaro_row, circulant_eigs, fourier_row, strang_row, Scheme};
use toeplitz_spectra::error::{Error, Result};
use toeplitz_spectra::metrics::{condition_estimate, error_report};
use toeplitz_spectra::sequences::{dirichlet_energy, HermitianSequence, SymbolFamily};
use toeplitz_spectra::toeplitz::{build_toeplitz, exact_eigs, Spectrum};

/// Largest N accepted for a single dense eigensolve.
const MAX_EXACT_N: usize = 4096;
/// Largest N accepted per sweep point (every sweep row needs the dense oracle).
const MAX_SWEEP_N: usize = 2048;

#[derive(Parser)]
#[command(
    name = "tspec",
    about = "Estimate eigenvalues of Hermitian Toeplitz matrices via circulant approximations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues (descending) of one circulant scheme or the exact matrix
    Eigs {
        #[command(flatten)]
        source: SourceArgs,
        /// Matrix size
        #[arg(long)]
        n: usize,
        /// fourier | strang | cesaro | exact
        #[arg(long)]
        scheme: String,
        /// Output path (default stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalue-error metrics versus the dense oracle over a list of sizes
    Sweep {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated sizes, strictly increasing, e.g. 64,128,256
        #[arg(long = "n-list")]
        n_list: String,
        /// fourier | strang | cesaro | all
        #[arg(long, default_value = "all")]
        scheme: String,
        /// Output path (default stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Condition-number estimate from the Cesàro circulant spectrum
    Condest {
        #[command(flatten)]
        source: SourceArgs,
        /// Matrix size
        #[arg(long)]
        n: usize,
        /// Also compute the dense-oracle condition number (N <= 2048)
        #[arg(long)]
        verify: bool,
        /// Output path (default stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dirichlet-kernel energy: total (expect N) and main-lobe ratio
    Dirichlet {
        /// Kernel order
        #[arg(long)]
        n: usize,
        /// Quadrature panels
        #[arg(long, default_value_t = 65536)]
        grid: usize,
        /// Output path (default stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Built-in symbol families
    Symbols {
        #[command(subcommand)]
        action: SymbolsAction,
    },
}

#[derive(Subcommand)]
enum SymbolsAction {
    /// List the built-in symbol families
    List,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Built-in symbol, e.g. triangular:0.25, sawtooth, rect_window:0.25, constant:3
    #[arg(long)]
    symbol: Option<String>,
    /// Coefficient file in the `#toeplitz-coeffs v1` format
    #[arg(long)]
    coeffs: Option<PathBuf>,
    /// Inline real coefficients, e.g. h0=2,h1=1,h2=0.5
    #[arg(long)]
    seq: Option<String>,
}

impl SourceArgs {
    fn sequence(&self, n: usize) -> Result<HermitianSequence> {
        if let Some(sym) = &self.symbol {
            return SymbolFamily::parse(sym)?.sequence(n);
        }
        if let Some(path) = &self.coeffs {
            return HermitianSequence::from_coeff_file(path);
        }
        if let Some(inline) = &self.seq {
            return parse_inline_sequence(inline);
        }
        Err(Error::validation(
            "one of --symbol, --coeffs, --seq is required".to_string(),
        ))
    }
}

fn parse_inline_sequence(text: &str) -> Result<HermitianSequence> {
    let mut coeffs = BTreeMap::new();
    for part in text.split(',') {
        let part = part.trim();
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::validation(format!("expected h<k>=<value>, got `{part}`")))?;
        let k: usize = key
            .strip_prefix('h')
            .ok_or_else(|| Error::validation(format!("coefficient `{key}` must start with h")))?
            .parse()
            .map_err(|e| Error::validation(format!("coefficient index in `{part}`: {e}")))?;
        let v: f64 = value
            .parse()
            .map_err(|e| Error::validation(format!("coefficient value in `{part}`: {e}")))?;
        if coeffs.insert(k, Complex64::new(v, 0.0)).is_some() {
            return Err(Error::validation(format!("duplicate coefficient h{k}")));
        }
    }
    if coeffs.is_empty() {
        return Err(Error::validation("empty inline sequence".to_string()));
    }
    HermitianSequence::new(coeffs, toeplitz_spectra::sequences::DecayClass::Unknown)
}

fn positive_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::validation("N must be positive".to_string()));
    }
    Ok(())
}

fn parse_n_list(text: &str) -> Result<Vec<usize>> {
    let mut sizes = Vec::new();
    for part in text.split(',') {
        let n: usize = part
            .trim()
            .parse()
            .map_err(|e| Error::validation(format!("size `{part}`: {e}")))?;
        positive_size(n)?;
        if let Some(&last) = sizes.last() {
            if n <= last {
                return Err(Error::validation(
                    "N list must be strictly increasing".to_string(),
                ));
            }
        }
        sizes.push(n);
    }
    if sizes.is_empty() {
        return Err(Error::validation("empty N list".to_string()));
    }
    Ok(sizes)
}

fn parse_scheme(text: &str) -> Result<Scheme> {
    match text {
        "fourier" => Ok(Scheme::Fourier),
        "strang" => Ok(Scheme::Strang),
        "cesaro" => Ok(Scheme::Cesaro),
        other => Err(Error::validation(format!("unknown scheme `{other}`"))),
    }
}

fn scheme_spectrum(seq: &HermitianSequence, n: usize, scheme: Scheme) -> Result<Spectrum> {
    let row = match scheme {
        Scheme::Fourier => fourier_row(seq, n)?,
        Scheme::Strang => strang_row(seq, n)?,
        Scheme::Cesaro => cesaro_row(seq, n)?,
    };
    circulant_eigs(&row)
}

fn open_output(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(std::fs::File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn cmd_eigs(source: &SourceArgs, n: usize, scheme: &str, out: &Option<PathBuf>) -> Result<()> {
    positive_size(n)?;
    let seq = source.sequence(n)?;
    let spectrum = if scheme == "exact" {
        if n > MAX_EXACT_N {
            return Err(Error::validation(format!(
                "exact eigensolve refuses N = {n} > {MAX_EXACT_N}"
            )));
        }
        exact_eigs(&build_toeplitz(&seq, n)?)?
    } else {
        scheme_spectrum(&seq, n, parse_scheme(scheme)?)?
    };
    let mut w = open_output(out)?;
    writeln!(w, "l,lambda_desc")?;
    for (l, v) in spectrum.descending().iter().enumerate() {
        writeln!(w, "{l},{v}")?;
    }
    Ok(())
}

fn sweep_schemes(text: &str) -> Result<Vec<Scheme>> {
    if text == "all" {
        let mut all = Scheme::ALL.to_vec();
        all.sort_by_key(|s| s.name());
        return Ok(all);
    }
    let mut schemes: Vec<Scheme> = text
        .split(',')
        .map(|s| parse_scheme(s.trim()))
        .collect::<Result<_>>()?;
    schemes.sort_by_key(|s| s.name());
    schemes.dedup();
    if schemes.is_empty() {
        return Err(Error::validation("scheme list is empty".to_string()));
    }
    Ok(schemes)
}

fn cmd_sweep(source: &SourceArgs, n_list: &str, scheme: &str, out: &Option<PathBuf>) -> Result<()> {
    let sizes = parse_n_list(n_list)?;
    if let Some(&max) = sizes.last() {
        if max > MAX_SWEEP_N {
            return Err(Error::validation(format!(
                "sweep rows need the dense oracle; N = {max} > {MAX_SWEEP_N}"
            )));
        }
    }
    let schemes = sweep_schemes(scheme)?;
    let mut rows = Vec::new();
    for &n in &sizes {
        let seq = source.sequence(n)?;
        let exact = exact_eigs(&build_toeplitz(&seq, n)?)?;
        for &s in &schemes {
            let approx = scheme_spectrum(&seq, n, s)?;
            let report = error_report(&exact, &approx, s)?;
            rows.push((
                n,
                s.name(),
                report.sup_error,
                report.extreme_errors.0,
                report.extreme_errors.1,
                report.eq_dist_stat,
            ));
        }
    }
    let mut w = open_output(out)?;
    writeln!(w, "N,scheme,sup_error,max_eig_error,min_eig_error,eq_dist_identity")?;
    for (n, s, sup, emax, emin, stat) in rows {
        writeln!(w, "{n},{s},{sup},{emax},{emin},{stat}")?;
    }
    Ok(())
}

fn cmd_condest(source: &SourceArgs, n: usize, verify: bool, out: &Option<PathBuf>) -> Result<()> {
    positive_size(n)?;
    if verify && n > MAX_SWEEP_N {
        return Err(Error::validation(format!(
            "--verify needs the dense oracle; N = {n} > {MAX_SWEEP_N}"
        )));
    }
    let seq = source.sequence(n)?;
    let estimate = condition_estimate(&seq, n)?;
    let mut w = open_output(out)?;
    writeln!(w, "estimate {estimate}")?;
    if verify {
        let h = exact_eigs(&build_toeplitz(&seq, n)?)?;
        let min = h.min();
        if min <= 0.0 {
            return Err(Error::NotPositiveDefinite { min_eig: min });
        }
        let oracle = h.max() / min;
        writeln!(w, "oracle {oracle}")?;
        writeln!(w, "relative_gap {}", (oracle - estimate).abs() / oracle)?;
    }
    Ok(())
}

fn cmd_dirichlet(n: usize, grid: usize, out: &Option<PathBuf>) -> Result<()> {
    positive_size(n)?;
    let total = dirichlet_energy(n, 0.0, 1.0, grid)?;
    let main_lobe = dirichlet_energy(n, 0.0, 1.0 / n as f64, grid)?;
    let mut w = open_output(out)?;
    writeln!(w, "total_energy {total}")?;
    writeln!(w, "main_lobe_ratio {}", main_lobe / total)?;
    Ok(())
}

fn cmd_symbols_list() -> Result<()> {
    let mut w = std::io::stdout().lock();
    for name in SymbolFamily::all_names() {
        writeln!(w, "{name}")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Eigs {
            source,
            n,
            scheme,
            out,
        } => cmd_eigs(&source, n, &scheme, &out),
        Command::Sweep {
            source,
            n_list,
            scheme,
            out,
        } => cmd_sweep(&source, &n_list, &scheme, &out),
        Command::Condest {
            source,
            n,
            verify,
            out,
        } => cmd_condest(&source, n, verify, &out),
        Command::Dirichlet { n, grid, out } => cmd_dirichlet(n, grid, &out),
        Command::Symbols {
            action: SymbolsAction::List,
        } => cmd_symbols_list(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Domain(_) | Error::NotPositiveDefinite { .. } | Error::NonHermitian { .. } => {
                    ExitCode::from(3)
                }
                _ => ExitCode::from(2),
            }
        }
    }
}
