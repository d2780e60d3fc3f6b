use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::{CMat, CVec};
use crate::repr_core::subgroup::standard_coordinates;
use crate::repr_core::{CaseTag, Group, RealizedIrrep, StabilizerSpec, Subgroup};

const STAB_TOL: f64 = 1e-9;

/// Real null space of `sum_a x_a v_a = 0` for complex vectors `v_a`.
fn real_kernel(vectors: &[CVec]) -> Vec<Vec<f64>> {
    let k = vectors.len();
    let n = vectors[0].len();
    let rows = (2 * n).max(k);
    let mut m = DMatrix::<f64>::zeros(rows, k);
    for (a, v) in vectors.iter().enumerate() {
        for i in 0..n {
            m[(i, a)] = v[i].re;
            m[(n + i, a)] = v[i].im;
        }
    }
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("v_t requested");
    let mut out: Vec<Vec<f64>> = (0..k)
        .filter(|&i| svd.singular_values[i] <= STAB_TOL)
        .map(|i| v_t.row(i).iter().copied().collect())
        .collect();
    for x in &mut out {
        if let Some(first) = x.iter().copied().find(|v| v.abs() > 1e-9) {
            let s = first.signum();
            x.iter_mut().for_each(|v| *v *= s);
        }
    }
    out
}

fn same_span(a: &[Vec<f64>], b: &[Vec<f64>], n: usize) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let proj = |rows: &[Vec<f64>]| {
        let m = DMatrix::from_fn(n, rows.len(), |i, k| rows[k][i]);
        let q = m.qr().q();
        &q * q.transpose()
    };
    (proj(a) - proj(b)).norm() < 1e-8
}

fn is_abelian(irrep: &RealizedIrrep, basis: &[Vec<f64>]) -> bool {
    let ops: Vec<CMat> = basis.iter().map(|x| irrep.algebra_element(x)).collect();
    ops.iter().enumerate().all(|(i, a)| ops[i + 1..].iter().all(|b| (a * b - b * a).norm() < 1e-9))
}

/// Detects the stability subgroup of `psi0` numerically.
///
/// `Lie(H)` is the real solution space of `(1 - psi psi^dagger) X psi = 0`
/// and `Lie(H0)` that of `X psi = 0`, with `X = sum_a x_a T_a`. The result is
/// matched against the supported subgroups; when the algebra coincides with a
/// standard embedding the standard coordinates are reported.
pub fn stabilizer_of(irrep: &RealizedIrrep, psi0: &CVec) -> Result<StabilizerSpec> {
    let norm = psi0.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotUnitNorm(norm));
    }
    if psi0.len() != irrep.dim() {
        return Err(Error::DimensionMismatch { expected: irrep.dim(), found: psi0.len() });
    }
    let group = irrep.group();
    let n_alg = group.algebra_dim();
    let proj = CMat::identity(psi0.len(), psi0.len()) - psi0 * psi0.adjoint();
    let images: Vec<CVec> = irrep.generators.iter().map(|t| t * psi0).collect();
    let transverse: Vec<CVec> = images.iter().map(|v| &proj * v).collect();
    let mut h = real_kernel(&transverse);
    let mut h0 = real_kernel(&images);

    let subgroup = match (group, h.len()) {
        (_, 0) => Subgroup::Trivial,
        (Group::SU2, 1) => Subgroup::U1T3,
        (Group::SU3, 2) if is_abelian(irrep, &h) => Subgroup::U1xU1,
        (Group::SU3, 4) if !is_abelian(irrep, &h) => Subgroup::U2InSU3,
        (_, d) => {
            return Err(Error::UnsupportedStabilizer(format!(
                "{group} stabilizer algebra of dimension {d} is not one of the supported subgroups"
            )))
        }
    };
    let case_tag = if h0.len() == h.len() {
        CaseTag::A
    } else if h0.len() + 1 == h.len() {
        CaseTag::B
    } else {
        return Err(Error::UnsupportedStabilizer(format!(
            "H has dimension {} but H0 has dimension {}",
            h.len(),
            h0.len()
        )));
    };
    if let Ok(std) = standard_coordinates(group, subgroup) {
        if same_span(&h, &std, n_alg) {
            h = std.clone();
            if case_tag == CaseTag::A {
                h0 = std;
            }
        }
    }
    Ok(StabilizerSpec { subgroup, case_tag, algebra: h, strict: h0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::real;
    use crate::repr_core::{realize_irrep, IrrepLabel};

    fn basis_vec(n: usize, k: usize) -> CVec {
        let mut v = CVec::zeros(n);
        v[k] = real(1.0);
        v
    }

    #[test]
    fn su2_m0_is_case_a() {
        let r = realize_irrep(IrrepLabel::su2(2)).unwrap();
        let s = stabilizer_of(&r, &basis_vec(3, 1)).unwrap();
        assert_eq!((s.subgroup, s.case_tag), (Subgroup::U1T3, CaseTag::A));
        assert_eq!(s.algebra, vec![vec![0.0, 0.0, 1.0]]);
    }

    #[test]
    fn su2_highest_weight_is_case_b() {
        let r = realize_irrep(IrrepLabel::su2(2)).unwrap();
        let s = stabilizer_of(&r, &basis_vec(3, 0)).unwrap();
        assert_eq!((s.subgroup, s.case_tag), (Subgroup::U1T3, CaseTag::B));
        assert!(s.strict.is_empty());
    }

    #[test]
    fn octet_fiducials() {
        let r = realize_irrep(IrrepLabel::su3(1, 1)).unwrap();
        let s = stabilizer_of(&r, &basis_vec(8, 5)).unwrap();
        assert_eq!((s.subgroup, s.case_tag), (Subgroup::U2InSU3, CaseTag::A));
        let s = stabilizer_of(&r, &basis_vec(8, 3)).unwrap();
        assert_eq!((s.subgroup, s.case_tag), (Subgroup::U1xU1, CaseTag::A));
    }

    #[test]
    fn generic_spin_one_is_trivial() {
        let r = realize_irrep(IrrepLabel::su2(2)).unwrap();
        let psi = crate::su2::generic_fiducial(3, 7);
        let s = stabilizer_of(&r, &psi).unwrap();
        assert_eq!(s.subgroup, Subgroup::Trivial);
    }
}
