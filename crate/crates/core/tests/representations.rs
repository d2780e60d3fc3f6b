use std::collections::BTreeMap;

use cohdiag::checker::{check_diagonal_representation, stabilizer_of, Status};
use cohdiag::linalg::{c, real, CMat, CVec};
use cohdiag::repr_core::*;
use cohdiag::su2::*;
use cohdiag::su3::{induced_content, InducedSubgroup};
use proptest::prelude::*;

fn basis(n: usize, k: usize) -> CVec {
    let mut v = CVec::zeros(n);
    v[k] = real(1.0);
    v
}

fn su2(twice_j: u32) -> RealizedIrrep {
    realize_irrep(IrrepLabel::su2(twice_j)).unwrap()
}

fn random_operator(n: usize, vals: &[f64]) -> CMat {
    CMat::from_fn(n, n, |i, j| c(vals[(2 * (i * n + j)) % vals.len()], vals[(2 * (i * n + j) + 1) % vals.len()]))
}

#[test]
fn su3_realizations_have_expected_dimension_and_casimir() {
    for p in 0..=3 {
        for q in 0..=3 {
            let r = realize_irrep(IrrepLabel::su3(p, q)).unwrap();
            assert_eq!(r.dim(), ((p + 1) * (q + 1) * (p + q + 2) / 2) as usize);
            assert!(r.commutation_residual() < 1e-10, "({p},{q})");
            assert!(r.casimir_residual() < 1e-10, "({p},{q})");
        }
    }
}

#[test]
fn octet_squared_spectrum() {
    let octet = realize_irrep(IrrepLabel::su3(1, 1)).unwrap();
    let d = tensor_decompose(&octet, &octet.conjugate()).unwrap();
    let expected: Vec<(IrrepLabel, usize)> = vec![
        (IrrepLabel::su3(0, 0), 1),
        (IrrepLabel::su3(1, 1), 2),
        (IrrepLabel::su3(3, 0), 1),
        (IrrepLabel::su3(0, 3), 1),
        (IrrepLabel::su3(2, 2), 1),
    ];
    assert_eq!(d.spectrum(), expected);
}

#[test]
fn stabilizer_examples() {
    let s = stabilizer_of(&su2(2), &basis(3, 1)).unwrap();
    assert_eq!((s.subgroup, s.case_tag), (Subgroup::U1T3, CaseTag::A));
    let s = stabilizer_of(&su2(2), &basis(3, 0)).unwrap();
    assert_eq!((s.subgroup, s.case_tag), (Subgroup::U1T3, CaseTag::B));
    let octet = realize_irrep(IrrepLabel::su3(1, 1)).unwrap();
    let psi = cohdiag::su3::iiy_state(IrrepLabel::su3(1, 1), IIYLabel::new(0, 0, 0)).unwrap();
    let s = stabilizer_of(&octet, &psi).unwrap();
    assert_eq!((s.subgroup, s.case_tag), (Subgroup::U2InSU3, CaseTag::A));
}

#[test]
fn reciprocity_closed_forms() {
    let torus = StabilizerSpec::standard(Group::SU3, Subgroup::U1xU1, CaseTag::A).unwrap();
    let u2 = StabilizerSpec::standard(Group::SU3, Subgroup::U2InSU3, CaseTag::A).unwrap();
    let torus_content = induced_content(InducedSubgroup::U1xU1);
    let u2_content = induced_content(InducedSubgroup::U2);
    for p in 0..=4u32 {
        for q in 0..=4u32 {
            let r = realize_irrep(IrrepLabel::su3(p, q)).unwrap();
            // independent count: p = q mod 3 gives min(p,q)+1 zero weights
            let expected = if (p as i64 - q as i64).rem_euclid(3) == 0 { p.min(q) as usize + 1 } else { 0 };
            assert_eq!(branching_multiplicity(&r, &torus, SubIrrep::Trivial).unwrap(), expected, "({p},{q})");
            assert_eq!(torus_content.multiplicity(p, q), expected);
            let expected_u2 = usize::from(p == q);
            assert_eq!(branching_multiplicity(&r, &u2, SubIrrep::Trivial).unwrap(), expected_u2, "({p},{q})");
            assert_eq!(u2_content.multiplicity(p, q), expected_u2);
        }
    }
}

#[test]
fn racah_signs_agree_with_numeric_blocks() {
    // The numeric construction follows the Condon–Shortley phase.
    for tj1 in 0..=4 {
        for tj2 in 0..=4 {
            let d = tensor_decompose(&su2(tj1), &su2(tj2)).unwrap();
            for b in &d.blocks {
                let IrrepLabel::SU2 { twice_j } = b.label else { unreachable!() };
                let exact = racah_block(tj1 as i64, tj2 as i64, twice_j as i64);
                assert!(cohdiag::linalg::max_abs_diff(&exact, &b.matrix) < 1e-10, "{tj1} {tj2} {twice_j}");
            }
        }
    }
}

#[test]
fn oracle_agrees_with_rank_test() {
    for twice_j0 in [2u32, 4] {
        let n0 = twice_j0 as usize + 1;
        let report = check_diagonal_representation(IrrepLabel::su2(twice_j0), &basis(n0, n0 / 2)).unwrap();
        let grid = SphereGrid::new(DEFAULT_ORDER).unwrap();
        let rho = fourier_oracle_rho(twice_j0, &grid, twice_j0).unwrap();
        for (twice_j, ops) in &rho {
            let norm: f64 = ops.iter().map(|m| m.norm_squared()).sum::<f64>().sqrt();
            let status = report.verdict.status_of(&IrrepLabel::su2(*twice_j)).unwrap();
            let deficient = matches!(status, Status::RankDeficient { .. });
            assert_eq!(norm < 1e-8, deficient, "J0={} J={}: |rho|={norm}", twice_j0 / 2, twice_j / 2);
        }
    }
}

#[test]
fn case_b_scalar_reduces_to_case_a_at_m0_zero() {
    for twice_j0 in [2u32, 4, 6] {
        assert_eq!(pi_matrix_example3(twice_j0, 0).unwrap(), pi_matrix_example2(twice_j0).unwrap());
    }
}

#[test]
fn parity_rule_for_m0_zero() {
    for twice_j0 in [2u32, 4, 6, 8] {
        for s in pi_matrix_example2(twice_j0).unwrap() {
            let odd = (s.twice_j / 2) % 2 == 1;
            assert_eq!(s.value.is_zero(), odd, "J0={} J={}", twice_j0 / 2, s.twice_j / 2);
        }
    }
}

#[test]
fn checker_scalars_match_racah_for_all_m0() {
    for twice_j0 in 1u32..=4 {
        let n0 = twice_j0 as usize + 1;
        for k in 0..n0 {
            let twice_m0 = twice_j0 as i64 - 2 * k as i64;
            let report = check_diagonal_representation(IrrepLabel::su2(twice_j0), &basis(n0, k)).unwrap();
            for s in pi_matrix_example3(twice_j0, twice_m0).unwrap() {
                let pi = report.pi_of(&IrrepLabel::su2(s.twice_j)).unwrap();
                let row = pi.row_of_state((s.twice_j / 2) as usize).unwrap();
                assert!((pi.entries[(row, 0)].norm() - s.value.value().abs()).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn pi_norms_sum_to_inverse_dimension() {
    for twice_j0 in [2u32, 3] {
        let n0 = twice_j0 as usize + 1;
        for seed in 0..5 {
            let psi = generic_fiducial(n0, seed);
            let cols = pi_matrix_example1(twice_j0, &psi).unwrap();
            let total: f64 = cols.iter().map(|col| col.column.norm_squared()).sum();
            assert!((total - 1.0 / n0 as f64).abs() < 1e-12, "{total}");
        }
    }
}

fn su2_pair() -> impl Strategy<Value = (u32, u32)> {
    (0u32..=4, 0u32..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn su2_cg_unitary_and_intertwining((a, b) in su2_pair()) {
        let (ra, rb) = (su2(a), su2(b));
        let d = tensor_decompose(&ra, &rb).unwrap();
        prop_assert!(d.unitarity_defect() < 1e-10);
        prop_assert!(d.intertwining_residual(&ra, &rb) < 1e-10);
    }

    #[test]
    fn racah_moduli_match_numeric((a, b) in (0u32..=6, 0u32..=6)) {
        let d = tensor_decompose(&su2(a), &su2(b)).unwrap();
        for blk in &d.blocks {
            let IrrepLabel::SU2 { twice_j } = blk.label else { unreachable!() };
            let exact = racah_block(a as i64, b as i64, twice_j as i64);
            let diff = exact.iter().zip(blk.matrix.iter()).map(|(x, y)| (x.norm() - y.norm()).abs()).fold(0.0, f64::max);
            prop_assert!(diff < 1e-10);
        }
    }

    #[test]
    fn su3_cg_unitary_and_intertwining(p1 in 0u32..=1, q1 in 0u32..=1, p2 in 0u32..=2, q2 in 0u32..=1) {
        let ra = realize_irrep(IrrepLabel::su3(p1, q1)).unwrap();
        let rb = realize_irrep(IrrepLabel::su3(p2, q2)).unwrap();
        let d = tensor_decompose(&ra, &rb).unwrap();
        prop_assert!(d.unitarity_defect() < 1e-10);
        prop_assert!(d.intertwining_residual(&ra, &rb) < 1e-10);
    }

    #[test]
    fn unit_tensor_gram_and_round_trip(twice_j0 in 1u32..=4, vals in proptest::collection::vec(-1.0f64..1.0, 50)) {
        let j0 = su2(twice_j0);
        let d = tensor_decompose(&j0, &j0.conjugate()).unwrap();
        let set = unit_tensors(&j0, &d).unwrap();
        prop_assert!(set.gram_residual() < 1e-10);
        let a = random_operator(j0.dim(), &vals);
        let back = resynthesize(&expand_operator(&a, &set).unwrap(), &set);
        prop_assert!((back - a).norm() < 1e-10);
    }

    #[test]
    fn unit_tensor_covariance(twice_j0 in 1u32..=3, t in proptest::collection::vec(-1.5f64..1.5, 3)) {
        let j0 = su2(twice_j0);
        let d = tensor_decompose(&j0, &j0.conjugate()).unwrap();
        let set = unit_tensors(&j0, &d).unwrap();
        prop_assert!(set.covariance_residual(&j0, &t).unwrap() < 1e-10);
    }

    #[test]
    fn verdict_consistency(twice_j0 in 1u32..=3, seed in 0u64..1000, canonical in proptest::bool::ANY, k in 0usize..4) {
        let n0 = twice_j0 as usize + 1;
        let psi = if canonical { basis(n0, k % n0) } else { generic_fiducial(n0, seed) };
        let r = check_diagonal_representation(IrrepLabel::su2(twice_j0), &psi).unwrap();
        prop_assert_eq!(r.verdict.exists, r.verdict.failures().next().is_none());
        let content: BTreeMap<_, _> = r.condition_one.iter().map(|c| (c.label, c.pass)).collect();
        prop_assert!(content.values().all(|&p| p));
    }
}
