use crate::linalg::C64;

use super::fiducial::{FiducialKind, FiducialState};
use super::fock::FockSpace;
use super::grid::PhaseGrid;
use super::laguerre::{zero_radii_in, RadialWindow};

/// Default relative threshold for flagging a sample as a zero.
pub const DEFAULT_THRESHOLD: f64 = 1e-6;

/// Samples below this magnitude are numerical noise: they are neither trusted
/// as zeros nor as nonzero values.
pub const NOISE_FLOOR: f64 = 1e-12;

/// Outcome of the nonvanishing test for a characteristic function on a grid.
#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub holds: bool,
    /// Grid points where `chi` is judged to vanish.
    pub fails_on: Vec<(f64, f64)>,
    /// Analytic zero circles that meet the grid square.
    pub circles: Vec<f64>,
    /// Samples under [`NOISE_FLOOR`] whose neighbourhood is too small to
    /// resolve a zero.
    pub unresolved: usize,
    pub samples: PhaseGrid,
}

/// Samples `chi`: from the closed form when the kind has one (so the cutoff
/// does not leak into the tails), otherwise with the exact displacement block.
pub fn sample_char(fid: &FiducialState, space: &FockSpace, grid: &mut PhaseGrid) {
    grid.fill(|q0, p0| fid.closed_form(space, q0, p0).unwrap_or_else(|| fid.char_block(space, q0, p0)));
}

/// Decides whether `chi` is nonvanishing on the grid.
///
/// A sample is flagged when it falls below `threshold` times the largest
/// magnitude in its 3x3 neighbourhood (provided that neighbourhood rises above
/// the noise floor), or when the phase jumps by more than `pi/2` between
/// adjacent samples that are both above the noise floor; the smaller of the
/// two is flagged. Number states also report every analytic zero circle that
/// meets the grid, so a circle passing between nodes is still caught.
pub fn check_nonvanishing(fid: &FiducialState, space: &FockSpace, extent: f64, resolution: usize, threshold: f64) -> crate::Result<ConditionReport> {
    let mut samples = PhaseGrid::zeros(extent, resolution)?;
    sample_char(fid, space, &mut samples);
    Ok(classify(fid, space, samples, threshold))
}

pub fn classify(fid: &FiducialState, space: &FockSpace, samples: PhaseGrid, threshold: f64) -> ConditionReport {
    let n = samples.resolution;
    let mag: Vec<f64> = samples.values.iter().map(|z| z.norm()).collect();
    let mut flagged = vec![false; n * n];
    let mut unresolved = 0;
    for i in 0..n {
        for j in 0..n {
            let k = i * n + j;
            let mut nb = 0.0_f64;
            for a in i.saturating_sub(1)..=(i + 1).min(n - 1) {
                for b in j.saturating_sub(1)..=(j + 1).min(n - 1) {
                    nb = nb.max(mag[a * n + b]);
                }
            }
            if nb * threshold >= NOISE_FLOOR && mag[k] < threshold * nb {
                flagged[k] = true;
            } else if mag[k] < NOISE_FLOOR {
                unresolved += 1;
            }
        }
    }
    let jump = |a: C64, b: C64| (a * b.conj()).arg().abs() > std::f64::consts::FRAC_PI_2;
    for i in 0..n {
        for j in 0..n {
            let k = i * n + j;
            for other in [(i + 1 < n).then(|| k + n), (j + 1 < n).then(|| k + 1)].into_iter().flatten() {
                if mag[k] >= NOISE_FLOOR && mag[other] >= NOISE_FLOOR && jump(samples.values[k], samples.values[other]) {
                    let low = if mag[k] <= mag[other] { k } else { other };
                    flagged[low] = true;
                }
            }
        }
    }
    let fails_on: Vec<(f64, f64)> = (0..n * n).filter(|&k| flagged[k]).map(|k| samples.point(k / n, k % n)).collect();
    let circles = match fid.kind {
        FiducialKind::Fock { n } => zero_radii_in(n, RadialWindow::new(0.0, samples.corner_radius()), space.c),
        _ => Vec::new(),
    };
    ConditionReport { holds: fails_on.is_empty() && circles.is_empty(), fails_on, circles, unresolved, samples }
}
