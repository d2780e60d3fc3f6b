use crate::error::{Error, Result};
use crate::linalg::{self, real, CMat, CVec};
use crate::repr_core::{CgBlock, IrrepLabel, RealizedIrrep};

/// The matrix `pi^{(J)}_{lambda Lambda} = sqrt(N_J)/N_J0 C^{J0 J J0 Lambda}_{psi0 lambda psi0}`.
///
/// Rows run over an orthonormal basis of the subgroup-scalar states of `J`,
/// columns over the copies of `J0` inside `J0 (x) J`.
#[derive(Clone, Debug)]
pub struct PiMatrix {
    pub label: IrrepLabel,
    pub entries: CMat,
    /// Human-readable name of each row state.
    pub row_labels: Vec<String>,
    /// Basis index of each row state in the canonical basis of `J`, when the
    /// row state is a single basis vector.
    pub row_states: Vec<Option<usize>>,
}

impl PiMatrix {
    pub fn rows(&self) -> usize {
        self.entries.nrows()
    }

    pub fn cols(&self) -> usize {
        self.entries.ncols()
    }

    pub fn singular_values(&self) -> Vec<f64> {
        linalg::singular_values(&self.entries)
    }

    /// Row whose state is canonical basis vector `k`.
    pub fn row_of_state(&self, k: usize) -> Option<usize> {
        self.row_states.iter().position(|s| *s == Some(k))
    }

    /// Sum of squared moduli of all entries.
    pub fn norm_squared(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }
}

/// Assembles the pi matrix for the irrep `target` from the couplings
/// `J0 (x) J -> J0` (`blocks`) and the row states (`scalars`, orthonormal
/// columns in the basis of `target`).
pub fn build_pi_matrix(
    j0: &RealizedIrrep,
    psi0: &CVec,
    target: &RealizedIrrep,
    scalars: &CMat,
    blocks: &[CgBlock],
) -> Result<PiMatrix> {
    let n0 = j0.dim();
    let nj = target.dim();
    if psi0.len() != n0 {
        return Err(Error::DimensionMismatch { expected: n0, found: psi0.len() });
    }
    let scale = (nj as f64).sqrt() / n0 as f64;
    let mut entries = CMat::zeros(scalars.ncols(), blocks.len());
    for (col, block) in blocks.iter().enumerate() {
        let image = &block.matrix * psi0;
        // contract the first factor with psi0^dagger
        let w = CVec::from_fn(nj, |j, _| (0..n0).map(|a| psi0[a].conj() * image[a * nj + j]).sum());
        for row in 0..scalars.ncols() {
            entries[(row, col)] = scalars.column(row).dotc(&w) * real(scale);
        }
    }
    let mut row_labels = Vec::new();
    let mut row_states = Vec::new();
    for row in 0..scalars.ncols() {
        let s = scalars.column(row);
        let state = (0..nj).find(|&k| (s[k].norm() - 1.0).abs() < 1e-9);
        row_states.push(state);
        row_labels.push(match state {
            Some(k) => target.states[k].to_string(),
            None => format!("lambda={}", row + 1),
        });
    }
    Ok(PiMatrix { label: target.label, entries, row_labels, row_states })
}
