//! Dense complex linear algebra helpers on top of `nalgebra`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

/// Magnitude below which a vector component counts as zero when fixing phases.
pub const PHASE_EPS: f64 = 1e-9;

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn real(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

pub fn commutator(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

pub fn is_diagonal(m: &CMat, tol: f64) -> bool {
    let scale = m.norm().max(1.0);
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            if i != j && m[(i, j)].norm() > tol * scale {
                return false;
            }
        }
    }
    true
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
pub fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let herm = (m + m.adjoint()) * real(0.5);
    let eig = herm.symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMat::from_fn(m.nrows(), order.len(), |r, k| eig.eigenvectors[(r, order[k])]);
    (values, vectors)
}

/// Groups sorted eigenvalues into clusters; a new cluster starts whenever the
/// gap to the previous value exceeds `rel_gap` times the spectral scale.
pub fn cluster_sorted(values: &[f64], rel_gap: f64) -> Vec<std::ops::Range<usize>> {
    let scale = values.iter().fold(1.0_f64, |acc, v| acc.max(v.abs()));
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || (values[i] - values[i - 1]).abs() > rel_gap * scale {
            if i > start {
                out.push(start..i);
            }
            start = i;
        }
    }
    out
}

/// Restricts `op` to the subspace spanned by the orthonormal columns of `basis`.
pub fn restrict(op: &CMat, basis: &CMat) -> CMat {
    basis.adjoint() * op * basis
}

/// Singular values in descending order.
pub fn singular_values(m: &CMat) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Singular values at or below this are zero regardless of `sigma_max`, so a
/// matrix of rounding noise has rank zero.
pub const RANK_ABS_FLOOR: f64 = 1e-12;

/// Numerical rank: singular values above both `rel_tol * sigma_max` and
/// [`RANK_ABS_FLOOR`].
pub fn numerical_rank(singular: &[f64], rel_tol: f64) -> usize {
    let smax = singular.first().copied().unwrap_or(0.0);
    let cut = (rel_tol * smax).max(RANK_ABS_FLOOR);
    singular.iter().filter(|&&s| s > cut).count()
}

/// Orthonormal basis of the null space of `m` (columns), via a full SVD.
/// Singular values below `tol` (absolute) count as zero.
pub fn null_space(m: &CMat, tol: f64) -> CMat {
    let n = m.ncols();
    if n == 0 {
        return CMat::zeros(0, 0);
    }
    if m.nrows() == 0 {
        return CMat::identity(n, n);
    }
    // Pad so the SVD returns the full right singular basis.
    let rows = m.nrows().max(n);
    let mut padded = CMat::zeros(rows, n);
    padded.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("v_t requested");
    let null: Vec<usize> = (0..n).filter(|&k| svd.singular_values[k] <= tol).collect();
    let mut out = CMat::zeros(n, null.len());
    for (col, &k) in null.iter().enumerate() {
        for r in 0..n {
            out[(r, col)] = v_t[(k, r)].conj();
        }
    }
    out
}

/// Multiplies `v` by a unit phase so its first non-negligible component is
/// real and positive.
pub fn fix_phase(v: &mut CVec) {
    let scale = v.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()));
    if scale == 0.0 {
        return;
    }
    if let Some(z) = v.iter().find(|z| z.norm() > PHASE_EPS * scale).copied() {
        let phase = z.conj() / z.norm();
        *v *= phase;
    }
}

/// Deterministic orthonormal basis of the column span of `span` (whose columns
/// must be orthonormal). Unit vectors `e_0, e_1, ...` are projected onto the
/// subspace in index order and Gram–Schmidt'ed; each result is then phase
/// fixed with [`fix_phase`].
pub fn canonical_basis(span: &CMat) -> CMat {
    let n = span.nrows();
    let k = span.ncols();
    let mut chosen: Vec<CVec> = Vec::with_capacity(k);
    for i in 0..n {
        if chosen.len() == k {
            break;
        }
        // P e_i = span * (span^dagger e_i)
        let coeffs: CVec = span.row(i).adjoint();
        let mut v: CVec = span * coeffs;
        for u in &chosen {
            let proj = u.dotc(&v);
            v -= u * proj;
        }
        let norm = v.norm();
        if norm > 1e-6 {
            chosen.push(v / real(norm));
        }
    }
    let mut out = CMat::zeros(n, chosen.len());
    for (j, mut v) in chosen.into_iter().enumerate() {
        fix_phase(&mut v);
        out.set_column(j, &v);
    }
    out
}

/// Completes a unit vector to an orthonormal basis with the vector first.
pub fn complete_basis(first: &CVec) -> CMat {
    let n = first.len();
    let mut cols: Vec<CVec> = vec![first.clone()];
    for i in 0..n {
        if cols.len() == n {
            break;
        }
        let mut v = CVec::zeros(n);
        v[i] = real(1.0);
        for u in &cols {
            let proj = u.dotc(&v);
            v -= u * proj;
        }
        let norm = v.norm();
        if norm > 1e-6 {
            cols.push(v / real(norm));
        }
    }
    CMat::from_columns(&cols)
}

/// `‖m^dagger m - 1‖_F`.
pub fn isometry_defect(m: &CMat) -> f64 {
    let g = m.adjoint() * m;
    (g - CMat::identity(m.ncols(), m.ncols())).norm()
}

pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    (a - b).iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}
