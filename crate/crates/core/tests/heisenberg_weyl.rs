use cohdiag::heisenberg_weyl::*;
use cohdiag::linalg::{c, real, CMat, CVec};
use proptest::prelude::*;

fn space(n: usize) -> FockSpace {
    FockSpace::new(n, 1.0).unwrap()
}

/// Zeros of L_n as eigenvalues of the Jacobi matrix of the Laguerre weight.
fn golub_welsch(n: usize) -> Vec<f64> {
    let mut j = nalgebra::DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        j[(k, k)] = (2 * k + 1) as f64;
        if k + 1 < n {
            j[(k, k + 1)] = (k + 1) as f64;
            j[(k + 1, k)] = (k + 1) as f64;
        }
    }
    let mut v: Vec<f64> = j.symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

#[test]
fn vacuum_at_two_zero() {
    let s = space(64);
    let v = char_function(&FiducialState::vacuum(&s), &s, 2.0, 0.0);
    assert!((v.value - real((-1.0f64).exp())).norm() < 1e-12);
}

#[test]
fn squeezed_profile() {
    let s = space(64);
    let eta: f64 = 0.5;
    let f = FiducialState::squeezed(&s, eta);
    let (q0, p0) = (1.2, -0.8);
    let expected = (-((2.0 * eta).exp() * q0 * q0 + (-2.0 * eta).exp() * p0 * p0) / 4.0).exp();
    let v = char_function(&f, &s, q0, p0);
    assert!((v.value.re - expected).abs() < 1e-10);
    assert!(v.value.im.abs() < 1e-10);
}

#[test]
fn first_excited_vanishes_on_root_two_circle() {
    let s = space(48);
    let f = FiducialState::fock(&s, 1).unwrap();
    for k in 0..8 {
        let t = k as f64 * std::f64::consts::PI / 4.0;
        let r = 2f64.sqrt();
        assert!(char_function(&f, &s, r * t.cos(), r * t.sin()).value.norm() < 1e-12);
    }
}

#[test]
fn zero_locus_matches_jacobi_eigenvalues() {
    for n in 1..=10 {
        let radii = zero_locus(n, RadialWindow::all(), 1.0).unwrap();
        let roots = golub_welsch(n);
        assert_eq!(radii.len(), n);
        for (r, x) in radii.iter().zip(&roots) {
            assert!((r - (2.0 * x).sqrt()).abs() < 1e-10, "n={n}: {r} vs {}", (2.0 * x).sqrt());
        }
    }
}

#[test]
fn trace_concentration() {
    // Tr(U(x)^dagger U(x)) = N, and it shrinks away from the diagonal.
    let s = space(40);
    let u0 = displacement(&s, 0.3, 0.2).matrix;
    let same = (u0.adjoint() * &u0).trace().norm();
    assert!((same - 40.0).abs() < 1e-8);
    let far = (displacement(&s, 2.3, -1.8).matrix.adjoint() * &u0).trace().norm();
    assert!(far < 0.25 * same, "{far}");
}

#[test]
fn identity_coefficients_peak_at_origin() {
    let s = space(24);
    let w = weyl_coefficients(&CMat::identity(24, 24), &s, 4.0, 17).unwrap();
    let mid = w.grid.at(8, 8).norm();
    let max = w.grid.values.iter().map(|z| z.norm()).fold(0.0, f64::max);
    assert_eq!(mid, max);
}

#[test]
fn squeezed_and_vacuum_pass_fock_two_fails() {
    let s = space(32);
    let vac = check_nonvanishing(&FiducialState::vacuum(&s), &s, 6.0, 49, DEFAULT_THRESHOLD).unwrap();
    assert!(vac.holds);
    let sq = check_nonvanishing(&FiducialState::squeezed(&s, 0.5), &s, 6.0, 49, DEFAULT_THRESHOLD).unwrap();
    assert!(sq.holds);
    let f2 = FiducialState::fock(&s, 2).unwrap();
    let r = check_nonvanishing(&f2, &s, 6.0, 49, DEFAULT_THRESHOLD).unwrap();
    assert!(!r.holds);
    assert_eq!(r.circles.len(), 2);
}

#[test]
fn circle_between_nodes_is_still_reported() {
    // Spacing 1 leaves the r = sqrt(2) circle between nodes on the axes.
    let s = space(16);
    let f = FiducialState::fock(&s, 1).unwrap();
    let r = check_nonvanishing(&f, &s, 2.0, 5, DEFAULT_THRESHOLD).unwrap();
    assert!(!r.holds);
    assert_eq!(r.circles.len(), 1);
}

#[test]
fn gaussian_sweep_never_vanishes() {
    // Gaussian fiducials pass; displaced number states fail.
    let s = space(32);
    for eta in [-0.8, -0.3, 0.0, 0.3, 0.8] {
        let f = FiducialState::squeezed(&s, eta);
        assert!(check_nonvanishing(&f, &s, 5.0, 41, DEFAULT_THRESHOLD).unwrap().holds, "eta={eta}");
    }
    for n in 1..=4 {
        let f = FiducialState::fock(&s, n).unwrap();
        assert!(!check_nonvanishing(&f, &s, 5.0, 41, DEFAULT_THRESHOLD).unwrap().holds, "n={n}");
    }
}

#[test]
fn custom_superposition_with_a_zero_is_flagged() {
    // (|0> + |1>)/sqrt 2 has chi = e^{-x/2}(1 - x/2 + Re(beta-ish)), which vanishes somewhere.
    let s = space(32);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut v = CVec::zeros(32);
    v[0] = real(h);
    v[1] = real(h);
    let f = FiducialState::custom(&s, v).unwrap();
    let r = check_nonvanishing(&f, &s, 4.0, 81, DEFAULT_THRESHOLD).unwrap();
    assert!(!r.holds);
    assert!(r.circles.is_empty());
}

#[test]
fn thermal_weight_matches_gaussian() {
    // The cutoff must be large enough that the operator's truncation error,
    // amplified by 1/chi ~ e^18 at the corners, stays negligible.
    let s = space(64);
    let nbar = 1.0;
    let w = diagonal_weight(&thermal_operator(&s, nbar), &FiducialState::vacuum(&s), &s, 6.0, 61, 1e300).unwrap();
    let mut worst: f64 = 0.0;
    for (a1, a2, phi) in w.phi.samples() {
        let oracle = (-(a1 * a1 + a2 * a2) / (2.0 * nbar)).exp() / (2.0 * std::f64::consts::PI * nbar);
        worst = worst.max((phi - real(oracle)).norm());
    }
    assert!(worst < 1e-6, "{worst}");
    assert!(w.residual < 1e-2);
}

#[test]
fn vacuum_projector_residual_drops_with_refinement() {
    let s = space(16);
    let mut a = CMat::zeros(16, 16);
    a[(0, 0)] = real(1.0);
    let vac = FiducialState::vacuum(&s);
    let coarse = diagonal_weight(&a, &vac, &s, 3.0, 13, 1e300).unwrap();
    let fine = diagonal_weight(&a, &vac, &s, 6.0, 49, 1e300).unwrap();
    assert!(fine.residual < coarse.residual, "{} vs {}", fine.residual, coarse.residual);
}

#[test]
fn weight_warns_on_amplification() {
    let s = space(16);
    let w = diagonal_weight(&thermal_operator(&s, 1.0), &FiducialState::vacuum(&s), &s, 6.0, 25, 10.0).unwrap();
    assert!(w.warnings.iter().any(|m| m.contains("distributional")));
}

#[test]
fn truncation_warning_outside_trust_region() {
    let s = space(16);
    assert!(displacement(&s, 3.0, 0.0).warning.is_some());
    assert!(displacement(&s, 1.0, 0.0).warning.is_none());
}

#[test]
fn metaplectic_squeeze_maps_axes() {
    // The squeezing profile is the vacuum one with q0 scaled by e^eta and p0 by e^-eta.
    let s = space(64);
    let eta = 0.4;
    let sq = FiducialState::squeezed(&s, eta);
    let vac = FiducialState::vacuum(&s);
    let (q0, p0) = (0.9, 1.3);
    let lhs = sq.char_block(&s, q0, p0);
    let rhs = vac.char_block(&s, q0 * f64::exp(eta), p0 * f64::exp(-eta));
    assert!((lhs - rhs).norm() < 1e-10);
}

fn reduced_phase(x: (f64, f64), y: (f64, f64)) -> cohdiag::linalg::C64 {
    // U(x) U(y) = exp(-i (x1 y2 - x2 y1)/2) U(x + y) at c = 1
    c(0.0, -(x.0 * y.1 - x.1 * y.0) / 2.0).exp()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_law(x1 in -1.4f64..1.4, x2 in -1.4f64..1.4, y1 in -1.4f64..1.4, y2 in -1.4f64..1.4) {
        let s = space(56);
        let k = 12;
        let lhs = displacement(&s, x1, x2).matrix * displacement(&s, y1, y2).matrix;
        let rhs = displacement(&s, x1 + y1, x2 + y2).matrix * reduced_phase((x1, x2), (y1, y2));
        let d = (lhs.view((0, 0), (k, k)) - rhs.view((0, 0), (k, k))).norm();
        prop_assert!(d < 1e-8, "{}", d);
    }

    #[test]
    fn adjoint_covariance(a1 in -1.4f64..1.4, a2 in -1.4f64..1.4, b1 in -1.4f64..1.4, b2 in -1.4f64..1.4) {
        let s = space(56);
        let k = 12;
        let d = displacement(&s, b1, b2).matrix;
        let u = displacement(&s, a1, a2).matrix;
        let lhs = &d * &u * d.adjoint();
        let rhs = &u * c(0.0, a1 * b2 - a2 * b1).exp();
        let diff = (lhs.view((0, 0), (k, k)) - rhs.view((0, 0), (k, k))).norm();
        prop_assert!(diff < 1e-8, "{}", diff);
    }

    #[test]
    fn closed_forms_in_trust_region(r in 0.0f64..4.0, t in 0.0f64..6.3, which in 0usize..6) {
        let s = space(64);
        let f = match which {
            0 => FiducialState::vacuum(&s),
            1 => FiducialState::squeezed(&s, 0.5),
            2 => FiducialState::squeezed(&s, -0.5),
            n => FiducialState::fock(&s, n - 2).unwrap(),
        };
        let v = char_function(&f, &s, r * t.cos(), r * t.sin());
        prop_assert!(v.discrepancy.unwrap() < 1e-8, "{:?}", v.discrepancy);
    }

    #[test]
    fn weyl_round_trip(re in proptest::collection::vec(-1.0f64..1.0, 9), im in proptest::collection::vec(-1.0f64..1.0, 9)) {
        // Operators supported on levels <= 2 fit inside R = 8.
        let s = space(32);
        let mut a = CMat::zeros(32, 32);
        for i in 0..3 {
            for j in 0..3 {
                a[(i, j)] = c(re[3 * i + j], im[3 * i + j]);
            }
        }
        let coeffs = weyl_coefficients(&a, &s, 8.0, 129).unwrap();
        let back = resynthesize_weyl(&coeffs, &s);
        let err = (back - &a).norm() / a.norm().max(1e-12);
        prop_assert!(err < 1e-3, "{}", err);
    }

    #[test]
    fn enlarging_the_grid_never_rescues(n in 1usize..4, half in 3usize..8, grow in 1usize..6) {
        // Same spacing, larger extent: the flagged set can only grow.
        let s = space(24);
        let f = FiducialState::fock(&s, n).unwrap();
        let h = 0.25;
        let small = check_nonvanishing(&f, &s, half as f64 * h * 2.0, 4 * half + 1, DEFAULT_THRESHOLD).unwrap();
        let big_half = half + grow;
        let big = check_nonvanishing(&f, &s, big_half as f64 * h * 2.0, 4 * big_half + 1, DEFAULT_THRESHOLD).unwrap();
        prop_assert!(!(!small.holds && big.holds));
        for p in &small.fails_on {
            prop_assert!(big.fails_on.iter().any(|q| (q.0 - p.0).abs() < 1e-9 && (q.1 - p.1).abs() < 1e-9));
        }
        prop_assert!(big.circles.len() >= small.circles.len());
    }
}
