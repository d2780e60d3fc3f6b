use crate::error::{Error, Result};
use crate::linalg::{real, CMat, C64};

use super::condition::{check_nonvanishing, ConditionReport, DEFAULT_THRESHOLD, NOISE_FLOOR};
use super::fiducial::FiducialState;
use super::fock::{displacement_block, FockOperator, FockSpace};
use super::grid::PhaseGrid;

/// Relative Parseval defect above which the grid is reported as too small.
pub const PARSEVAL_WARN: f64 = 0.05;

/// Default bound on `1/|chi|` before the weight is flagged as distributional.
pub const DEFAULT_AMPLIFICATION_BOUND: f64 = 1e6;

/// Samples of `a(q0,p0) = Tr(U^dagger A)/(2 pi c)`.
#[derive(Clone, Debug)]
pub struct WeylCoefficients {
    pub grid: PhaseGrid,
    /// `|2 pi c h^2 sum |a|^2 - Tr(A^dagger A)| / Tr(A^dagger A)`.
    pub parseval_defect: f64,
    pub warning: Option<String>,
}

fn check_square(a: &FockOperator, space: &FockSpace) -> Result<()> {
    if a.nrows() != space.cutoff || a.ncols() != space.cutoff {
        return Err(Error::DimensionMismatch { expected: space.cutoff, found: a.nrows().max(a.ncols()) });
    }
    Ok(())
}

pub fn weyl_coefficients(a: &FockOperator, space: &FockSpace, extent: f64, resolution: usize) -> Result<WeylCoefficients> {
    check_square(a, space)?;
    let mut grid = PhaseGrid::zeros(extent, resolution)?;
    let norm = 1.0 / (2.0 * std::f64::consts::PI * space.c);
    grid.fill(|q0, p0| {
        let u = displacement_block(space, q0, p0);
        u.iter().zip(a.iter()).map(|(x, y)| x.conj() * y).sum::<C64>() * norm
    });
    let h = grid.spacing();
    let quad: f64 = grid.values.iter().map(|z| z.norm_sqr()).sum::<f64>() * h * h * 2.0 * std::f64::consts::PI * space.c;
    let total = a.norm_squared();
    let parseval_defect = if total > 0.0 { (quad - total).abs() / total } else { quad };
    let warning = (parseval_defect > PARSEVAL_WARN)
        .then(|| format!("Parseval defect {parseval_defect:.3} exceeds {PARSEVAL_WARN}; the grid may not cover the operator's support"));
    Ok(WeylCoefficients { grid, parseval_defect, warning })
}

/// `sum a(q0,p0) U^{(q0,p0)} h^2` over the grid.
pub fn resynthesize_weyl(coeffs: &WeylCoefficients, space: &FockSpace) -> CMat {
    let h = coeffs.grid.spacing();
    let mut out = CMat::zeros(space.cutoff, space.cutoff);
    for (q0, p0, a) in coeffs.grid.samples() {
        out += displacement_block(space, q0, p0) * (a * h * h);
    }
    out
}

/// Sampled diagonal weight with its diagnostics.
#[derive(Clone, Debug)]
pub struct DiagonalWeight {
    /// `phi(alpha_1, alpha_2)`, `alpha_1` as the outer index.
    pub phi: PhaseGrid,
    /// `||sum phi rho h^2 - A||_F / ||A||_F`.
    pub residual: f64,
    /// Largest `1/|chi|` over the samples that enter the quotient.
    pub max_inverse_char: f64,
    /// Samples left out of the quotient because `|chi|` was at noise level.
    pub masked: usize,
    pub warnings: Vec<String>,
}

/// Weight `phi` with `A = int phi(alpha) rho(alpha)`, where `rho(alpha)` is
/// the fiducial projector displaced by `U^{(c alpha_1, c alpha_2)}`. The
/// kernel `exp(i(alpha_2 q0 - alpha_1 p0))` is summed as a plain Riemann sum
/// over the same grid, reused for `alpha`.
///
/// Refuses with [`Error::ConditionViolated`] when `chi` vanishes on the grid.
pub fn diagonal_weight(a: &FockOperator, fid: &FiducialState, space: &FockSpace, extent: f64, resolution: usize, amplification_bound: f64) -> Result<DiagonalWeight> {
    check_square(a, space)?;
    let cond = check_nonvanishing(fid, space, extent, resolution, DEFAULT_THRESHOLD)?;
    diagonal_weight_with(a, fid, space, &cond, amplification_bound)
}

/// As [`diagonal_weight`], reusing a nonvanishing report already computed on
/// the grid.
pub fn diagonal_weight_with(a: &FockOperator, fid: &FiducialState, space: &FockSpace, cond: &ConditionReport, amplification_bound: f64) -> Result<DiagonalWeight> {
    check_square(a, space)?;
    if !cond.holds {
        return Err(Error::ConditionViolated { points: cond.fails_on.clone(), circles: cond.circles.clone() });
    }
    let (extent, resolution) = (cond.samples.extent, cond.samples.resolution);
    let weyl = weyl_coefficients(a, space, extent, resolution)?;
    let mut warnings: Vec<String> = weyl.warning.iter().cloned().collect();
    let n = resolution;
    let chi = &cond.samples;
    let mut quotient = CMat::zeros(n, n);
    let mut masked = 0;
    let mut max_inverse_char = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            let z = chi.at(i, j);
            if z.norm() < NOISE_FLOOR {
                masked += 1;
                continue;
            }
            max_inverse_char = max_inverse_char.max(1.0 / z.norm());
            quotient[(i, j)] = weyl.grid.at(i, j) / z.conj();
        }
    }
    if max_inverse_char > amplification_bound {
        warnings.push(format!(
            "1/|chi| reaches {max_inverse_char:.2e} (bound {amplification_bound:.0e}); the weight is likely distributional"
        ));
    }

    let x = chi.coords();
    let h = chi.spacing();
    let minus = CMat::from_fn(n, n, |j, k| C64::from_polar(1.0, -x[k] * x[j]));
    let plus = CMat::from_fn(n, n, |k, i| C64::from_polar(1.0, x[k] * x[i]));
    // g[i, k1] = sum_j e^{-i alpha1 p0_j} f[i, j];  phi^T = plus * g
    let g = &quotient * &minus;
    let phi_t = &plus * &g * real(space.c * h * h / (2.0 * std::f64::consts::PI));
    let mut phi = PhaseGrid::zeros(extent, resolution)?;
    for k1 in 0..n {
        for k2 in 0..n {
            phi.values[k1 * n + k2] = phi_t[(k2, k1)];
        }
    }

    let mut rebuilt = CMat::zeros(space.cutoff, space.cutoff);
    for (a1, a2, w) in phi.samples() {
        let v = displacement_block(space, space.c * a1, space.c * a2) * &fid.vector;
        rebuilt += &v * v.adjoint() * (w * h * h);
    }
    let scale = a.norm();
    let residual = (&rebuilt - a).norm() / if scale > 0.0 { scale } else { 1.0 };
    Ok(DiagonalWeight { phi, residual, max_inverse_char, masked, warnings })
}

/// Thermal operator `sum_n nbar^n/(1+nbar)^(n+1) |n><n|` on the truncated space.
pub fn thermal_operator(space: &FockSpace, nbar: f64) -> CMat {
    let mut m = CMat::zeros(space.cutoff, space.cutoff);
    for k in 0..space.cutoff {
        m[(k, k)] = real(nbar.powi(k as i32) / (1.0 + nbar).powi(k as i32 + 1));
    }
    m
}
