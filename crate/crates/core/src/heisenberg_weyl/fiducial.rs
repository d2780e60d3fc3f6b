use crate::error::{Error, Result};
use crate::linalg::{real, CVec, C64};

use super::fock::{displacement, displacement_block, FockSpace};
use super::laguerre::laguerre;

/// Kinds of fiducial state, with a closed-form characteristic function for all
/// but `Custom`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FiducialKind {
    Vacuum,
    Squeezed { eta: f64 },
    Fock { n: usize },
    Custom,
}

impl std::fmt::Display for FiducialKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FiducialKind::Vacuum => write!(f, "vacuum"),
            FiducialKind::Squeezed { eta } => write!(f, "squeezed:{eta}"),
            FiducialKind::Fock { n } => write!(f, "fock:{n}"),
            FiducialKind::Custom => write!(f, "custom"),
        }
    }
}

impl std::str::FromStr for FiducialKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(format!("unknown state `{s}` (vacuum | squeezed:ETA | fock:N)"));
        let s = s.trim();
        if s == "vacuum" {
            return Ok(FiducialKind::Vacuum);
        }
        if let Some(eta) = s.strip_prefix("squeezed:") {
            let eta: f64 = eta.parse().map_err(|_| bad())?;
            if !eta.is_finite() {
                return Err(bad());
            }
            return Ok(FiducialKind::Squeezed { eta });
        }
        if let Some(n) = s.strip_prefix("fock:") {
            return Ok(FiducialKind::Fock { n: n.parse().map_err(|_| bad())? });
        }
        Err(bad())
    }
}

/// A unit vector in a truncated Fock space.
#[derive(Clone, Debug)]
pub struct FiducialState {
    pub kind: FiducialKind,
    pub vector: CVec,
}

impl FiducialState {
    pub fn vacuum(space: &FockSpace) -> Self {
        Self::fock(space, 0).expect("cutoff is positive")
    }

    pub fn fock(space: &FockSpace, n: usize) -> Result<Self> {
        if n >= space.cutoff {
            return Err(Error::DimensionMismatch { expected: space.cutoff, found: n + 1 });
        }
        let mut v = CVec::zeros(space.cutoff);
        v[n] = real(1.0);
        let kind = if n == 0 { FiducialKind::Vacuum } else { FiducialKind::Fock { n } };
        Ok(FiducialState { kind, vector: v })
    }

    /// `S(eta)|0>` truncated to the cutoff and renormalised; its characteristic
    /// function is `exp(-(e^{2 eta} q0^2 + e^{-2 eta} p0^2)/(4c))`.
    pub fn squeezed(space: &FockSpace, eta: f64) -> Self {
        let t = -eta.tanh();
        let mut v = CVec::zeros(space.cutoff);
        let mut amp = 1.0 / eta.cosh().sqrt();
        let mut k = 0usize;
        while 2 * k < space.cutoff {
            v[2 * k] = real(amp);
            let kf = k as f64;
            amp *= t * ((2.0 * kf + 1.0) * (2.0 * kf + 2.0)).sqrt() / (2.0 * (kf + 1.0));
            k += 1;
        }
        let norm = v.norm();
        FiducialState { kind: FiducialKind::Squeezed { eta }, vector: v / real(norm) }
    }

    /// Arbitrary coefficients; they must already have unit norm.
    pub fn custom(space: &FockSpace, coeffs: CVec) -> Result<Self> {
        if coeffs.len() != space.cutoff {
            return Err(Error::DimensionMismatch { expected: space.cutoff, found: coeffs.len() });
        }
        let norm = coeffs.norm();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotUnitNorm(norm));
        }
        Ok(FiducialState { kind: FiducialKind::Custom, vector: coeffs })
    }

    pub fn from_kind(space: &FockSpace, kind: FiducialKind) -> Result<Self> {
        match kind {
            FiducialKind::Vacuum => Ok(Self::vacuum(space)),
            FiducialKind::Squeezed { eta } => Ok(Self::squeezed(space, eta)),
            FiducialKind::Fock { n } => Self::fock(space, n),
            FiducialKind::Custom => Err(Error::InvalidLabel("custom states need explicit coefficients".into())),
        }
    }

    /// Closed-form `chi(q0, p0)`, when the kind has one.
    pub fn closed_form(&self, space: &FockSpace, q0: f64, p0: f64) -> Option<C64> {
        let cc = space.c;
        match self.kind {
            FiducialKind::Vacuum => Some(real((-(q0 * q0 + p0 * p0) / (4.0 * cc)).exp())),
            FiducialKind::Squeezed { eta } => {
                let e = (2.0 * eta).exp();
                Some(real((-(e * q0 * q0 + p0 * p0 / e) / (4.0 * cc)).exp()))
            }
            FiducialKind::Fock { n } => {
                let x = (q0 * q0 + p0 * p0) / (2.0 * cc);
                Some(real((-x / 2.0).exp() * laguerre(n, x)))
            }
            FiducialKind::Custom => None,
        }
    }

    /// `<psi0| U_block |psi0>` using the exact displacement block.
    pub fn char_block(&self, space: &FockSpace, q0: f64, p0: f64) -> C64 {
        let d = displacement_block(space, q0, p0);
        self.vector.dotc(&(d * &self.vector))
    }
}

/// A characteristic-function sample from the truncated matrix exponential,
/// compared against the closed form when one exists.
#[derive(Clone, Debug)]
pub struct CharValue {
    pub value: C64,
    pub closed_form: Option<C64>,
    pub discrepancy: Option<f64>,
    pub warning: Option<String>,
}

/// `chi(q0,p0) = <psi0| U^{(q0,p0)} |psi0>`.
pub fn char_function(fid: &FiducialState, space: &FockSpace, q0: f64, p0: f64) -> CharValue {
    let disp = displacement(space, q0, p0);
    let value = fid.vector.dotc(&(&disp.matrix * &fid.vector));
    let closed_form = fid.closed_form(space, q0, p0);
    let discrepancy = closed_form.map(|z| (z - value).norm());
    let mut warning = disp.warning;
    if warning.is_none() {
        if let Some(d) = discrepancy.filter(|&d| d > 1e-8) {
            warning = Some(format!("truncated value differs from closed form by {d:.2e}"));
        }
    }
    CharValue { value, closed_form, discrepancy, warning }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuum_closed_form_matches_exponential() {
        let s = FockSpace::new(64, 1.0).unwrap();
        let v = char_function(&FiducialState::vacuum(&s), &s, 1.0, 0.0);
        assert!((v.value.re - (-0.25f64).exp()).abs() < 1e-12);
        assert!(v.warning.is_none());
    }

    #[test]
    fn squeezed_closed_form_matches_block() {
        let s = FockSpace::new(64, 1.0).unwrap();
        let f = FiducialState::squeezed(&s, 0.4);
        for &(q, p) in &[(0.5, 0.0), (0.0, 0.5), (0.3, -0.7), (-1.1, 0.9)] {
            let exact = f.closed_form(&s, q, p).unwrap();
            assert!((f.char_block(&s, q, p) - exact).norm() < 1e-10, "({q},{p})");
        }
    }

    #[test]
    fn fock_closed_form_matches_block() {
        let s = FockSpace::new(32, 1.0).unwrap();
        let f = FiducialState::fock(&s, 3).unwrap();
        for &(q, p) in &[(0.5, 0.2), (1.4, -0.4), (2.5, 2.0)] {
            let exact = f.closed_form(&s, q, p).unwrap();
            assert!((f.char_block(&s, q, p) - exact).norm() < 1e-12);
        }
    }

    #[test]
    fn parse_kinds() {
        assert_eq!("vacuum".parse::<FiducialKind>().unwrap(), FiducialKind::Vacuum);
        assert_eq!("fock:2".parse::<FiducialKind>().unwrap(), FiducialKind::Fock { n: 2 });
        assert_eq!("squeezed:0.5".parse::<FiducialKind>().unwrap(), FiducialKind::Squeezed { eta: 0.5 });
        assert!("fock".parse::<FiducialKind>().is_err());
    }

    #[test]
    fn custom_requires_unit_norm() {
        let s = FockSpace::new(4, 1.0).unwrap();
        assert!(FiducialState::custom(&s, CVec::from_element(4, real(1.0))).is_err());
    }
}
