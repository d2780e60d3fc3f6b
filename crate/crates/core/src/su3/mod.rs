//! SU(3): isospin/hypercharge bases, the induced-representation tables for
//! the torus and U(2), and the octet fiducials.

pub mod iiy;
pub mod induced;
pub mod octet;

pub use crate::repr_core::IIYLabel;
pub use iiy::{iiy_basis, IIYBasis};
pub use induced::{induced_content, InducedContent, InducedSubgroup};
pub use octet::{iiy_state, octet_report, pi_matrices_octet, OctetFiducial};
