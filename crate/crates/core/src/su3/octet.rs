use serde::Serialize;

use crate::checker::{check_with_stabilizer, DiagonalReport, PiMatrix};
use crate::error::{Error, Result};
use crate::linalg::{real, CVec};
use crate::repr_core::{realize_irrep, CaseTag, Group, IIYLabel, IrrepLabel, StabilizerSpec, StateLabel, Subgroup};

/// The two `(I3, Y) = (0, 0)` octet states used as fiducials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OctetFiducial {
    /// `I = 1, I3 = 0, Y = 0`; stabilizer U(1) x U(1).
    I3YCharged,
    /// `I = 0, I3 = 0, Y = 0`; stabilizer U(2).
    U2Scalar,
}

impl OctetFiducial {
    pub fn iiy(self) -> IIYLabel {
        match self {
            OctetFiducial::I3YCharged => IIYLabel::new(2, 0, 0),
            OctetFiducial::U2Scalar => IIYLabel::new(0, 0, 0),
        }
    }

    pub fn subgroup(self) -> Subgroup {
        match self {
            OctetFiducial::I3YCharged => Subgroup::U1xU1,
            OctetFiducial::U2Scalar => Subgroup::U2InSU3,
        }
    }
}

/// Canonical-basis vector of an IIY state of an SU(3) irrep.
pub fn iiy_state(label: IrrepLabel, state: IIYLabel) -> Result<CVec> {
    let irrep = realize_irrep(label)?;
    let k = irrep
        .states
        .iter()
        .position(|s| *s == StateLabel::IIY(state))
        .ok_or_else(|| Error::InvalidLabel(format!("{label} has no state {state}")))?;
    let mut v = CVec::zeros(irrep.dim());
    v[k] = real(1.0);
    Ok(v)
}

/// Full check for an octet fiducial with its declared stabilizer.
pub fn octet_report(fiducial: OctetFiducial) -> Result<DiagonalReport> {
    let octet = IrrepLabel::su3(1, 1);
    let irrep = realize_irrep(octet)?;
    let psi0 = iiy_state(octet, fiducial.iiy())?;
    let spec = StabilizerSpec::standard(Group::SU3, fiducial.subgroup(), CaseTag::A)?;
    check_with_stabilizer(&irrep, &psi0, spec)
}

/// The pi matrices for every irrep of `8 (x) 8` that has scalar rows.
pub fn pi_matrices_octet(fiducial: OctetFiducial) -> Result<Vec<PiMatrix>> {
    Ok(octet_report(fiducial)?.pi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singlet_entry() {
        let pis = pi_matrices_octet(OctetFiducial::I3YCharged).unwrap();
        let p = pis.iter().find(|p| p.label == IrrepLabel::su3(0, 0)).unwrap();
        assert!((p.entries[(0, 0)].norm() - 0.125).abs() < 1e-12);
    }

    #[test]
    fn u2_scalar_misses_decuplets() {
        let r = octet_report(OctetFiducial::U2Scalar).unwrap();
        assert!(!r.verdict.exists);
        assert!(r.pi_of(&IrrepLabel::su3(3, 0)).is_none());
    }
}
