use crate::error::{Error, Result};
use crate::linalg::{c, real, CMat, C64};

/// Truncated Fock space of the Heisenberg–Weyl irrep with central value `c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FockSpace {
    pub cutoff: usize,
    pub c: f64,
}

/// Operators on a [`FockSpace`].
pub type FockOperator = CMat;

impl FockSpace {
    pub fn new(cutoff: usize, c: f64) -> Result<Self> {
        if cutoff == 0 {
            return Err(Error::InvalidGrid("Fock cutoff must be positive".into()));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidGrid(format!("central value must be positive, got {c}")));
        }
        Ok(FockSpace { cutoff, c })
    }

    pub fn annihilation(&self) -> CMat {
        let n = self.cutoff;
        let mut a = CMat::zeros(n, n);
        for k in 1..n {
            a[(k - 1, k)] = real((k as f64).sqrt());
        }
        a
    }

    pub fn creation(&self) -> CMat {
        self.annihilation().adjoint()
    }

    /// `q = sqrt(c/2) (a + a^dagger)`.
    pub fn q_hat(&self) -> CMat {
        let a = self.annihilation();
        (&a + a.adjoint()) * real((self.c / 2.0).sqrt())
    }

    /// `p = i sqrt(c/2) (a^dagger - a)`, so that `[q, p] = i c`.
    pub fn p_hat(&self) -> CMat {
        let a = self.annihilation();
        (a.adjoint() - &a) * c(0.0, (self.c / 2.0).sqrt())
    }

    /// Coherent amplitude of `U^{(q0,p0)}`: `beta = -(q0 + i p0)/sqrt(2c)`.
    pub fn beta(&self, q0: f64, p0: f64) -> C64 {
        c(q0, p0) * real(-1.0 / (2.0 * self.c).sqrt())
    }

    /// Whether `(q0^2 + p0^2)/c <= N/4`, where truncation effects are
    /// negligible for low-lying states.
    pub fn in_trust_region(&self, q0: f64, p0: f64) -> bool {
        (q0 * q0 + p0 * p0) / self.c <= self.cutoff as f64 / 4.0
    }
}

/// A displacement matrix with its truncation diagnostics.
#[derive(Clone, Debug)]
pub struct Displacement {
    pub matrix: CMat,
    /// `|| U^dagger U - 1 ||_F`.
    pub unitarity_defect: f64,
    pub warning: Option<String>,
}

/// `U^{(q0,p0)} = exp(i (q0 p - p0 q)/c)` exponentiated on the truncated space.
pub fn displacement(space: &FockSpace, q0: f64, p0: f64) -> Displacement {
    let gen = (space.p_hat() * real(q0) - space.q_hat() * real(p0)) * c(0.0, 1.0 / space.c);
    let matrix = gen.exp();
    let unitarity_defect = crate::linalg::isometry_defect(&matrix);
    let warning = (!space.in_trust_region(q0, p0)).then(|| {
        format!(
            "(q0,p0)=({q0},{p0}) is outside the trust region (q0^2+p0^2)/c <= {}; unitarity defect {unitarity_defect:.2e}",
            space.cutoff as f64 / 4.0
        )
    });
    Displacement { matrix, unitarity_defect, warning }
}

/// The leading `N x N` block of the untruncated `U^{(q0,p0)}`, from the
/// closed form `<m|D(beta)|n> = sqrt(n!/m!) beta^(m-n) e^(-|beta|^2/2)
/// L_n^(m-n)(|beta|^2)` for `m >= n` and its counterpart for `m < n`.
pub fn displacement_block(space: &FockSpace, q0: f64, p0: f64) -> CMat {
    let n = space.cutoff;
    let beta = space.beta(q0, p0);
    let x = beta.norm_sqr();
    let gauss = (-x / 2.0).exp();
    let mut out = CMat::zeros(n, n);
    for k in 0..n {
        // sqrt(j!/(j+k)!) at j = 0
        let mut pref: f64 = (1..=k).map(|i| 1.0 / (i as f64).sqrt()).product();
        let down = beta.powu(k as u32);
        let up = (-beta.conj()).powu(k as u32);
        let mut lag_prev = 0.0;
        let mut lag = 1.0;
        for j in 0..n - k {
            if j == 1 {
                lag_prev = lag;
                lag = 1.0 + k as f64 - x;
            } else if j > 1 {
                let jm = (j - 1) as f64;
                let next = ((2.0 * jm + 1.0 + k as f64 - x) * lag - (jm + k as f64) * lag_prev) / (jm + 1.0);
                lag_prev = lag;
                lag = next;
            }
            if j > 0 {
                pref *= (j as f64 / (j + k) as f64).sqrt();
            }
            let base = pref * gauss * lag;
            out[(j + k, j)] = down * base;
            if k > 0 {
                out[(j, j + k)] = up * base;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_on_leading_block() {
        let s = FockSpace::new(10, 1.0).unwrap();
        let a = s.annihilation();
        let comm = &a * s.creation() - s.creation() * &a;
        for i in 0..9 {
            for j in 0..9 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((comm[(i, j)] - real(expected)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn zero_displacement_is_identity() {
        let s = FockSpace::new(12, 1.0).unwrap();
        let d = displacement(&s, 0.0, 0.0);
        assert!((d.matrix - CMat::identity(12, 12)).norm() < 1e-14);
    }

    #[test]
    fn closed_form_block_matches_exponential() {
        let s = FockSpace::new(48, 1.0).unwrap();
        let (q0, p0) = (0.7, -1.3);
        let exact = displacement_block(&s, q0, p0);
        let expm = displacement(&s, q0, p0).matrix;
        let k = 12;
        let diff = (exact.view((0, 0), (k, k)) - expm.view((0, 0), (k, k))).norm();
        assert!(diff < 1e-10, "{diff}");
    }

    #[test]
    fn vacuum_element() {
        let s = FockSpace::new(20, 1.0).unwrap();
        let d = displacement_block(&s, 2.0, 0.0);
        assert!((d[(0, 0)].re - (-1.0f64).exp()).abs() < 1e-15);
    }
}
