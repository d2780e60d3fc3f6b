//! The existence test: stabilizer detection, induced-representation content,
//! pi matrices, and the two conditions combined into a [`Verdict`].

mod pi;
mod stabilizer;
mod verdict;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::heisenberg_weyl::ConditionReport;
use crate::linalg::{self, CVec};
use crate::repr_core::{
    couple_into, realize_irrep, scalar_subspace, tensor_decompose, IrrepLabel, RealizedIrrep, StabilizerSpec,
};

pub use pi::{build_pi_matrix, PiMatrix};
pub use stabilizer::stabilizer_of;
pub use verdict::{Status, Verdict, VerdictEntry, VerdictKey};

/// Relative singular-value cutoff for the rank test.
pub const RANK_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionOne {
    pub label: IrrepLabel,
    pub required: usize,
    pub available: usize,
    pub pass: bool,
}

/// Condition (i): every irrep of the operator spectrum must occur in the
/// induced representation at least as often. Irreps missing from `content`
/// count as multiplicity zero.
pub fn condition_one(spectrum: &[(IrrepLabel, usize)], content: &BTreeMap<IrrepLabel, usize>) -> Vec<ConditionOne> {
    spectrum
        .iter()
        .map(|&(label, required)| {
            let available = content.get(&label).copied().unwrap_or(0);
            ConditionOne { label, required, available, pass: available >= required }
        })
        .collect()
}

/// Condition (ii): the pi matrix needs at least as many rows as columns and
/// full column rank, counting singular values above `tol * sigma_max` and
/// above [`linalg::RANK_ABS_FLOOR`].
pub fn condition_two(pi: &PiMatrix, tol: f64) -> Status {
    let sv = pi.singular_values();
    let rank = linalg::numerical_rank(&sv, tol);
    let cols = pi.cols();
    if pi.rows() >= cols && rank == cols {
        Status::Ok
    } else {
        let mut singular_values = sv;
        singular_values.resize(cols, 0.0);
        Status::RankDeficient { rank, cols, singular_values }
    }
}

/// Everything computed while deciding one configuration.
#[derive(Clone, Debug)]
pub struct DiagonalReport {
    pub j0: IrrepLabel,
    pub stabilizer: StabilizerSpec,
    /// Irreps of `J0 (x) J0*` with multiplicities.
    pub spectrum: Vec<(IrrepLabel, usize)>,
    pub condition_one: Vec<ConditionOne>,
    /// One matrix per irrep of the spectrum that has at least one scalar row.
    pub pi: Vec<PiMatrix>,
    pub verdict: Verdict,
}

impl DiagonalReport {
    pub fn pi_of(&self, label: &IrrepLabel) -> Option<&PiMatrix> {
        self.pi.iter().find(|p| p.label == *label)
    }
}

/// Decides whether the coherent states of `psi0` (given in the canonical basis
/// of `j0`) admit a diagonal representation of every operator.
pub fn check_diagonal_representation(j0: IrrepLabel, psi0: &CVec) -> Result<DiagonalReport> {
    let irrep = realize_irrep(j0)?;
    check_realized(&irrep, psi0)
}

pub fn check_realized(j0: &RealizedIrrep, psi0: &CVec) -> Result<DiagonalReport> {
    let stabilizer = stabilizer_of(j0, psi0)?;
    check_with_stabilizer(j0, psi0, stabilizer)
}

/// As [`check_realized`] with an explicitly declared stabilizer. The fiducial
/// must be invariant up to phase under it.
pub fn check_with_stabilizer(j0: &RealizedIrrep, psi0: &CVec, stabilizer: StabilizerSpec) -> Result<DiagonalReport> {
    let n = j0.dim();
    let proj = linalg::CMat::identity(n, n) - psi0 * psi0.adjoint();
    for x in &stabilizer.algebra {
        if (&proj * (j0.algebra_element(x) * psi0)).norm() > 1e-9 {
            return Err(Error::NotSubgroupScalar(stabilizer.subgroup.to_string()));
        }
    }
    for x in &stabilizer.strict {
        if (j0.algebra_element(x) * psi0).norm() > 1e-9 {
            return Err(Error::NotSubgroupScalar(format!("{} (strict part)", stabilizer.subgroup)));
        }
    }
    let decomp = tensor_decompose(j0, &j0.conjugate())?;
    let spectrum = decomp.spectrum();

    let mut content = BTreeMap::new();
    let mut scalars = BTreeMap::new();
    for (label, _) in &spectrum {
        let s = scalar_subspace(&decomp.targets[label], &stabilizer);
        content.insert(*label, s.ncols());
        scalars.insert(*label, s);
    }
    let cond1 = condition_one(&spectrum, &content);

    let mut pis = Vec::new();
    let mut entries = Vec::new();
    for c1 in &cond1 {
        let target = &decomp.targets[&c1.label];
        let rows = &scalars[&c1.label];
        let pi = if rows.ncols() > 0 {
            let blocks = couple_into(j0, target, j0)?;
            if blocks.len() != c1.required {
                return Err(Error::Numerical(format!(
                    "{} occurs {} times in J0 x J0* but J0 occurs {} times in J0 x {}",
                    c1.label,
                    c1.required,
                    blocks.len(),
                    c1.label
                )));
            }
            let pi = build_pi_matrix(j0, psi0, target, rows, &blocks)?;
            pis.push(pi.clone());
            Some(pi)
        } else {
            None
        };
        let status = if !c1.pass {
            Status::MissingInInduced { required: c1.required, available: c1.available }
        } else {
            condition_two(pi.as_ref().expect("rows exist when condition (i) passes"), RANK_TOL)
        };
        entries.push(VerdictEntry { key: VerdictKey::Irrep { label: c1.label }, status });
    }
    Ok(DiagonalReport {
        j0: j0.label,
        stabilizer,
        spectrum,
        condition_one: cond1,
        pi: pis,
        verdict: Verdict::from_entries(entries),
    })
}

/// Heisenberg–Weyl verdict from a nonvanishing test: every flagged grid point
/// and every zero circle becomes a failing entry whose single "singular value"
/// is the sampled `|chi|` (zero for circles).
pub fn hw_verdict(report: &ConditionReport) -> Verdict {
    let n = report.samples.resolution;
    let mut entries: Vec<VerdictEntry> = report
        .fails_on
        .iter()
        .map(|&(q0, p0)| {
            let i = ((q0 + report.samples.extent) / report.samples.spacing()).round() as usize;
            let j = ((p0 + report.samples.extent) / report.samples.spacing()).round() as usize;
            let mag = report.samples.values[(i * n + j).min(n * n - 1)].norm();
            VerdictEntry {
                key: VerdictKey::PhasePoint { q0, p0 },
                status: Status::RankDeficient { rank: 0, cols: 1, singular_values: vec![mag] },
            }
        })
        .collect();
    entries.extend(report.circles.iter().map(|&radius| VerdictEntry {
        key: VerdictKey::ZeroCircle { radius },
        status: Status::RankDeficient { rank: 0, cols: 1, singular_values: vec![0.0] },
    }));
    Verdict::from_entries(entries)
}

/// Convenience: the spectrum of `J0 (x) J0*`.
pub fn operator_spectrum(j0: IrrepLabel) -> Result<Vec<(IrrepLabel, usize)>> {
    let irrep = realize_irrep(j0)?;
    Ok(tensor_decompose(&irrep, &irrep.conjugate())?.spectrum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{real, CMat};

    fn e(n: usize, k: usize) -> CVec {
        let mut v = CVec::zeros(n);
        v[k] = real(1.0);
        v
    }

    #[test]
    fn spin_one_m0_fails_at_j1() {
        let r = check_diagonal_representation(IrrepLabel::su2(2), &e(3, 1)).unwrap();
        assert!(!r.verdict.exists);
        assert_eq!(r.verdict.failing_labels(), vec![IrrepLabel::su2(2)]);
        let p0 = r.pi_of(&IrrepLabel::su2(0)).unwrap();
        assert!((p0.entries[(0, 0)].re - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn spin_half_up_exists() {
        let r = check_diagonal_representation(IrrepLabel::su2(1), &e(2, 0)).unwrap();
        assert!(r.verdict.exists);
    }

    #[test]
    fn zero_one_by_one_is_rank_deficient() {
        let pi = PiMatrix {
            label: IrrepLabel::su2(0),
            entries: CMat::zeros(1, 1),
            row_labels: vec!["m=0".into()],
            row_states: vec![Some(0)],
        };
        assert!(matches!(condition_two(&pi, RANK_TOL), Status::RankDeficient { rank: 0, cols: 1, .. }));
    }

    #[test]
    fn more_columns_than_rows_fails() {
        let pi = PiMatrix {
            label: IrrepLabel::su3(1, 1),
            entries: CMat::from_element(1, 2, real(1.0)),
            row_labels: vec!["a".into()],
            row_states: vec![None],
        };
        assert!(!condition_two(&pi, RANK_TOL).is_ok());
    }

    #[test]
    fn hw_verdict_lists_circles() {
        use crate::heisenberg_weyl::{check_nonvanishing, FiducialState, FockSpace, DEFAULT_THRESHOLD};
        let s = FockSpace::new(16, 1.0).unwrap();
        let vac = check_nonvanishing(&FiducialState::vacuum(&s), &s, 3.0, 13, DEFAULT_THRESHOLD).unwrap();
        assert!(hw_verdict(&vac).exists);
        let f2 = FiducialState::fock(&s, 2).unwrap();
        let r = check_nonvanishing(&f2, &s, 3.0, 13, DEFAULT_THRESHOLD).unwrap();
        let v = hw_verdict(&r);
        assert!(!v.exists);
        let circles = v.per_irrep.iter().filter(|e| matches!(e.key, VerdictKey::ZeroCircle { .. })).count();
        assert_eq!(circles, 2);
    }
}
