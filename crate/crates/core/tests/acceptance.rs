//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toeplitz_spectra::circulant::{
    cesaro_row, chan_optimality_gap, circulant_eigs, fourier_row, strang_row, CirculantRow, Scheme,
};
use toeplitz_spectra::dft::{dft_forward, dft_inverse};
use toeplitz_spectra::metrics::{sorted_alignment_check, sup_error};
use toeplitz_spectra::sequences::{
    cesaro_sum, dirichlet_energy, HermitianSequence, SymbolFamily,
};
use toeplitz_spectra::toeplitz::{build_toeplitz, exact_eigs, toeplitz_matvec, Spectrum};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn seq_2_1() -> HermitianSequence {
    HermitianSequence::banded_real(&[(0, 2.0), (1, 1.0)]).unwrap()
}

fn report(id: u32, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {id:02} {name}: PASS");
    } else {
        println!("criterion {id:02} {name}: FAIL");
        for f in failures {
            println!("    - {f}");
        }
        panic!("criterion {id:02} {name} failed");
    }
}

macro_rules! ensure {
    ($failures:expr, $cond:expr, $($msg:tt)*) => {
        if !$cond {
            $failures.push(format!($($msg)*));
        }
    };
}

fn random_hermitian_row(rng: &mut impl Rng, n: usize) -> CirculantRow {
    let mut row = vec![c(0.0, 0.0); n];
    row[0] = c(rng.gen_range(-1.0..1.0), 0.0);
    for k in 1..=(n / 2) {
        let v = if 2 * k == n {
            c(rng.gen_range(-1.0..1.0), 0.0)
        } else {
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        };
        row[k] = v;
        row[n - k] = v.conj();
    }
    CirculantRow::new(Scheme::Cesaro, row).unwrap()
}

fn random_hermitian_matrix(rng: &mut impl Rng, n: usize) -> toeplitz_spectra::DenseHermitian {
    let mut mat = nalgebra::DMatrix::from_element(n, n, c(0.0, 0.0));
    for m in 0..n {
        mat[(m, m)] = c(rng.gen_range(-1.0..1.0), 0.0);
        for k in (m + 1)..n {
            let v = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            mat[(m, k)] = v;
            mat[(k, m)] = v.conj();
        }
    }
    toeplitz_spectra::DenseHermitian::from_matrix(mat).unwrap()
}

fn scheme_spectrum(seq: &HermitianSequence, n: usize, scheme: Scheme) -> Spectrum {
    let row = match scheme {
        Scheme::Fourier => fourier_row(seq, n).unwrap(),
        Scheme::Strang => strang_row(seq, n).unwrap(),
        Scheme::Cesaro => cesaro_row(seq, n).unwrap(),
    };
    circulant_eigs(&row).unwrap()
}

fn family_seq(fam: SymbolFamily, n: usize) -> HermitianSequence {
    fam.sequence(n).unwrap()
}

fn exact_spectrum(seq: &HermitianSequence, n: usize) -> Spectrum {
    exact_eigs(&build_toeplitz(seq, n).unwrap()).unwrap()
}

#[test]
fn criterion_01_exact_row_construction() {
    let mut failures = Vec::new();
    let seq = seq_2_1();

    let hand: &[(Scheme, usize, &[f64])] = &[
        (Scheme::Fourier, 4, &[2.0, 1.0, 0.0, 1.0]),
        (Scheme::Fourier, 5, &[2.0, 1.0, 0.0, 0.0, 1.0]),
        (Scheme::Strang, 4, &[2.0, 1.0, 0.0, 1.0]),
        (Scheme::Strang, 5, &[2.0, 1.0, 0.0, 0.0, 1.0]),
        (Scheme::Cesaro, 4, &[2.0, 0.75, 0.0, 0.75]),
        (Scheme::Cesaro, 5, &[2.0, 0.8, 0.0, 0.0, 0.8]),
    ];
    for &(scheme, n, expect) in hand {
        let row = match scheme {
            Scheme::Fourier => fourier_row(&seq, n),
            Scheme::Strang => strang_row(&seq, n),
            Scheme::Cesaro => cesaro_row(&seq, n),
        }
        .unwrap();
        for (k, (got, want)) in row.entries().iter().zip(expect).enumerate() {
            ensure!(
                failures,
                (got - c(*want, 0.0)).norm() <= 1e-12,
                "{scheme} N={n} row[{k}] = {got} != {want}"
            );
        }
    }

    // Cesàro row vs the sample-sigma_N-then-inverse-DFT oracle.
    for n in [4usize, 5] {
        let direct = cesaro_row(&seq, n).unwrap();
        let samples: Vec<Complex64> = (0..n)
            .map(|l| c(cesaro_sum(&seq, n, l as f64 / n as f64).unwrap(), 0.0))
            .collect();
        let oracle = dft_inverse(&samples).unwrap();
        for (k, (a, b)) in direct.entries().iter().zip(&oracle).enumerate() {
            ensure!(
                failures,
                (a - b).norm() <= 1e-10,
                "cesaro N={n} row[{k}]: direct {a} vs sampling oracle {b}"
            );
        }
    }

    report(1, "exact row construction", &failures);
}

#[test]
fn criterion_02_circulant_eigs_oracle_equivalence() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    for trial in 0..50 {
        let n = [4usize, 8, 16][trial % 3];
        let row = random_hermitian_row(&mut rng, n);
        let fast = circulant_eigs(&row).unwrap().descending();
        let dense = exact_eigs(&row.densify().unwrap()).unwrap().descending();
        for l in 0..n {
            ensure!(
                failures,
                (fast[l] - dense[l]).abs() <= 1e-9,
                "trial {trial} N={n} l={l}: {} vs {}",
                fast[l],
                dense[l]
            );
        }
    }
    report(2, "circulant eigs vs dense oracle", &failures);
}

#[test]
fn criterion_03_band_convergence_rate() {
    let mut failures = Vec::new();
    let seq = seq_2_1();
    let sizes = [64usize, 128, 256, 512, 1024];
    let exact: Vec<Spectrum> = sizes.iter().map(|&n| exact_spectrum(&seq, n)).collect();
    for scheme in Scheme::ALL {
        let errs: Vec<f64> = sizes
            .iter()
            .zip(&exact)
            .map(|(&n, ex)| sup_error(ex, &scheme_spectrum(&seq, n, scheme)).unwrap())
            .collect();
        for i in 0..4 {
            ensure!(
                failures,
                errs[i + 1] <= 0.8 * errs[i],
                "{scheme}: error({}) = {} > 0.8 * error({}) = 0.8 * {}",
                sizes[i + 1],
                errs[i + 1],
                sizes[i],
                errs[i]
            );
        }
        let base = sizes[0] as f64 * errs[0];
        for (i, &n) in sizes.iter().enumerate() {
            let scaled = n as f64 * errs[i];
            ensure!(
                failures,
                scaled <= 2.0 * base,
                "{scheme}: N*error at N={n} is {scaled}, exceeds 2x the N=64 value {base}"
            );
        }
    }
    report(3, "Theorem 2 rate, band case", &failures);
}

#[test]
fn criterion_04_triangular_sup_error_halves() {
    let mut failures = Vec::new();
    let fam = SymbolFamily::Triangular { w: 0.25 };
    let err_at = |n: usize, scheme: Scheme| -> f64 {
        let seq = family_seq(fam, n);
        sup_error(&exact_spectrum(&seq, n), &scheme_spectrum(&seq, n, scheme)).unwrap()
    };
    for scheme in Scheme::ALL {
        let e64 = err_at(64, scheme);
        let e512 = err_at(512, scheme);
        ensure!(
            failures,
            e512 < 0.5 * e64,
            "{scheme}: sup_error(512) = {e512} not < 0.5 * sup_error(64) = 0.5 * {e64}"
        );
    }
    report(4, "Theorem 1, triangular symbol", &failures);
}

#[test]
fn criterion_05_sawtooth_gibbs_plateau() {
    let mut failures = Vec::new();
    let n = 1024;
    let seq = family_seq(SymbolFamily::Sawtooth, n);
    let exact = exact_spectrum(&seq, n);
    let err = |scheme: Scheme| sup_error(&exact, &scheme_spectrum(&seq, n, scheme)).unwrap();

    let cesaro = err(Scheme::Cesaro);
    ensure!(failures, cesaro < 0.02, "cesaro sup_error {cesaro} >= 0.02");
    for scheme in [Scheme::Fourier, Scheme::Strang] {
        let e = err(scheme);
        ensure!(
            failures,
            (0.06..=0.12).contains(&e),
            "{scheme} sup_error {e} outside the Gibbs band [0.06, 0.12]"
        );
    }
    report(5, "Gibbs plateau, sawtooth", &failures);
}

#[test]
fn criterion_06_rect_window_lemma_exactness() {
    let mut failures = Vec::new();
    let fam = SymbolFamily::RectWindow { w: 0.25 };
    for n in [8usize, 64, 256] {
        let seq = family_seq(fam, n);
        let eigs = circulant_eigs(&cesaro_row(&seq, n).unwrap()).unwrap();
        let vals = eigs.values();
        let mut min_off_gap = f64::INFINITY;
        for (l, &v) in vals.iter().enumerate() {
            if l == n / 4 || l == 3 * n / 4 {
                ensure!(
                    failures,
                    (v - 0.5).abs() <= 1e-9,
                    "N={n} l={l}: eigenvalue {v} != 1/2"
                );
            } else {
                min_off_gap = min_off_gap.min((v - 0.5).abs());
                ensure!(
                    failures,
                    (v - 0.5).abs() >= 0.4 - 1e-9,
                    "N={n} l={l}: |{v} - 1/2| < 0.4"
                );
            }
        }
        // the 0.45 offset is conjectured, not proven: report only
        println!("    N={n}: min |lambda - 1/2| off the exact indices = {min_off_gap:.6}");
    }
    report(6, "Lemma 7 exactness, rect window", &failures);
}

#[test]
fn criterion_07_rect_window_extreme_eigenvalues() {
    let mut failures = Vec::new();
    let fam = SymbolFamily::RectWindow { w: 0.25 };
    let gaps = |n: usize| -> (f64, f64) {
        let seq = family_seq(fam, n);
        let eigs = circulant_eigs(&cesaro_row(&seq, n).unwrap()).unwrap();
        ((eigs.max() - 1.0).abs(), eigs.min().abs())
    };
    let (top_256, bottom_256) = gaps(256);
    let (top_2048, bottom_2048) = gaps(2048);
    ensure!(failures, top_2048 <= 0.05, "|lambda_max - 1| = {top_2048} > 0.05");
    ensure!(failures, bottom_2048 <= 0.05, "|lambda_min| = {bottom_2048} > 0.05");
    ensure!(
        failures,
        top_2048 < top_256,
        "top gap did not shrink: {top_2048} vs {top_256} at N=256"
    );
    ensure!(
        failures,
        bottom_2048 < bottom_256,
        "bottom gap did not shrink: {bottom_2048} vs {bottom_256} at N=256"
    );
    report(7, "Theorem 4 extreme eigenvalues, rect window", &failures);
}

#[test]
fn criterion_08_cesaro_bracketing() {
    let mut failures = Vec::new();
    let families = [
        SymbolFamily::Triangular { w: 0.25 },
        SymbolFamily::Sawtooth,
        SymbolFamily::RectWindow { w: 0.25 },
    ];
    for fam in families {
        let spec = fam.spec().unwrap();
        for n in [16usize, 64] {
            let seq = family_seq(fam, n);
            let h = exact_spectrum(&seq, n);
            let cbar = circulant_eigs(&cesaro_row(&seq, n).unwrap()).unwrap();
            ensure!(
                failures,
                cbar.min() >= h.min() - 1e-10,
                "{fam} N={n}: cesaro min {} below toeplitz min {}",
                cbar.min(),
                h.min()
            );
            ensure!(
                failures,
                cbar.max() <= h.max() + 1e-10,
                "{fam} N={n}: cesaro max {} above toeplitz max {}",
                cbar.max(),
                h.max()
            );
            ensure!(
                failures,
                cbar.min() > spec.ess_inf && cbar.max() < spec.ess_sup,
                "{fam} N={n}: cesaro range [{}, {}] not strictly inside ({}, {})",
                cbar.min(),
                cbar.max(),
                spec.ess_inf,
                spec.ess_sup
            );
        }
    }
    report(8, "Lemma 4 bracketing", &failures);
}

#[test]
fn criterion_09_chan_optimality() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    let seq = seq_2_1();
    for trial in 0..200 {
        let p = random_hermitian_row(&mut rng, 16);
        let (base, perturbed) = chan_optimality_gap(&seq, 16, &p).unwrap();
        ensure!(
            failures,
            perturbed >= base - 1e-12,
            "trial {trial}: perturbation reduced the Frobenius gap ({perturbed} < {base})"
        );
    }
    let families = [
        SymbolFamily::Constant(3.0),
        SymbolFamily::Triangular { w: 0.25 },
        SymbolFamily::Sawtooth,
        SymbolFamily::RectWindow { w: 0.25 },
    ];
    for fam in families {
        for n in [16usize, 64] {
            let seq = family_seq(fam, n);
            let pert = strang_row(&seq, n)
                .unwrap()
                .sub(&cesaro_row(&seq, n).unwrap())
                .unwrap();
            let (chan, strang) = chan_optimality_gap(&seq, n, &pert).unwrap();
            ensure!(
                failures,
                strang >= chan - 1e-12,
                "{fam} N={n}: Strang distance {strang} below Chan distance {chan}"
            );
        }
    }
    report(9, "Chan Frobenius optimality", &failures);
}

#[test]
fn criterion_10_dirichlet_lemmas() {
    let mut failures = Vec::new();
    for n in [4usize, 16, 128, 512] {
        let total = dirichlet_energy(n, 0.0, 1.0, 1 << 16).unwrap();
        ensure!(
            failures,
            (total - n as f64).abs() <= 1e-4 * n as f64,
            "N={n}: total energy {total} not within 1e-4 of N"
        );
        let main_lobe = dirichlet_energy(n, 0.0, 1.0 / n as f64, 4096).unwrap();
        ensure!(
            failures,
            main_lobe >= 0.45 * n as f64,
            "N={n}: main-lobe energy {main_lobe} < 0.45 N"
        );
    }
    report(10, "Dirichlet kernel energy lemmas", &failures);
}

#[test]
fn criterion_11_sorting_lemmas() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(1011);
    for trial in 0..1000 {
        let u: Vec<f64> = (0..32).map(|_| rng.gen_range(-10.0..10.0)).collect();
        let v: Vec<f64> = (0..32).map(|_| rng.gen_range(-10.0..10.0)).collect();
        ensure!(
            failures,
            sorted_alignment_check(&u, &v).unwrap(),
            "trial {trial}: sorting magnified the sup distance"
        );
    }

    // r-gap lemma, exhaustive over {0,1,2}-valued sequences of length <= 7.
    for len in 2..=7usize {
        for code in 0..3usize.pow(len as u32) {
            let mut seq = Vec::with_capacity(len);
            let mut rem = code;
            for _ in 0..len {
                seq.push((rem % 3) as f64);
                rem /= 3;
            }
            let mut desc = seq.clone();
            desc.sort_by(|a, b| b.partial_cmp(a).unwrap());
            for r in 1..len {
                let mut lhs = 0.0f64;
                let mut rhs = 0.0f64;
                for rp in 1..=r {
                    for l in 0..len - rp {
                        lhs = lhs.max(desc[l] - desc[l + rp]);
                        rhs = rhs.max((seq[l] - seq[l + rp]).abs());
                    }
                }
                ensure!(failures, lhs <= rhs, "seq {seq:?} r={r}: {lhs} > {rhs}");
            }
        }
    }
    report(11, "Appendix C sorting lemmas", &failures);
}

#[test]
fn criterion_12_infrastructure() {
    let mut failures = Vec::new();

    // DFT exact cases
    let impulse = dft_forward(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
    for (l, v) in impulse.iter().enumerate() {
        ensure!(failures, (v - c(1.0, 0.0)).norm() <= 1e-12, "impulse DFT[{l}] = {v}");
    }
    let constant = dft_forward(&[c(1.0, 0.0); 4]).unwrap();
    ensure!(failures, (constant[0] - c(4.0, 0.0)).norm() <= 1e-12, "constant DFT[0]");
    for (l, v) in constant.iter().enumerate().skip(1) {
        ensure!(failures, v.norm() <= 1e-12, "constant DFT[{l}] = {v}");
    }

    // prime-N agreement with the defining sum
    let mut rng = ChaCha8Rng::seed_from_u64(1012);
    let x: Vec<Complex64> = (0..97)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let fast = dft_forward(&x).unwrap();
    for l in 0..97 {
        let naive: Complex64 = (0..97)
            .map(|k| {
                let angle = -2.0 * std::f64::consts::PI * (l * k) as f64 / 97.0;
                x[k] * Complex64::from_polar(1.0, angle)
            })
            .sum();
        ensure!(
            failures,
            (fast[l] - naive).norm() <= 1e-8,
            "prime-N DFT[{l}]: {} vs naive {}",
            fast[l],
            naive
        );
    }

    // fast Toeplitz matvec vs dense multiply
    for trial in 0..100 {
        let n = rng.gen_range(1..=128usize);
        let support = rng.gen_range(0..n);
        let pairs: Vec<(usize, Complex64)> = (0..=support)
            .map(|k| {
                let im = if k == 0 { 0.0 } else { rng.gen_range(-1.0..1.0) };
                (k, c(rng.gen_range(-1.0..1.0), im))
            })
            .collect();
        let seq = HermitianSequence::banded(&pairs).unwrap();
        let x: Vec<Complex64> = (0..n)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let fastv = toeplitz_matvec(&seq, n, &x).unwrap();
        let dense = build_toeplitz(&seq, n).unwrap();
        let slow = dense.as_matrix() * nalgebra::DVector::from_vec(x);
        for (l, (a, b)) in fastv.iter().zip(slow.iter()).enumerate() {
            ensure!(
                failures,
                (a - b).norm() <= 1e-10,
                "trial {trial} N={n} entry {l}: fast {a} vs dense {b}"
            );
        }
    }

    // Sturmian interlacing on random Hermitian matrices
    for trial in 0..50 {
        let n = rng.gen_range(2..=32usize);
        let a = random_hermitian_matrix(&mut rng, n);
        let full = exact_eigs(&a).unwrap().descending();
        let inner = exact_eigs(&a.leading_principal().unwrap())
            .unwrap()
            .descending();
        for l in 0..n - 1 {
            ensure!(
                failures,
                full[l] >= inner[l] - 1e-9 && inner[l] >= full[l + 1] - 1e-9,
                "trial {trial} N={n} l={l}: interlacing violated"
            );
        }
    }

    report(12, "infrastructure", &failures);
}
