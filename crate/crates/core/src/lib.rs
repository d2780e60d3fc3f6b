//! Decide whether a family of generalized coherent states admits a diagonal
//! representation for every operator on the carrier space.
//!
//! The crate covers the compact groups SU(2) and SU(3), where the question
//! reduces to a finite collection of Clebsch–Gordan matrices, and the
//! Heisenberg–Weyl group, which is treated on a truncated Fock space.
//!
//! Module map:
//!
//! - [`repr_core`]: realized irreps, tensor-product decomposition, unit
//!   tensors, subgroup branching.
//! - [`su2`]: exact Racah Clebsch–Gordan values and a sphere-quadrature
//!   oracle for the projector Fourier coefficients.
//! - [`su3`]: isospin/hypercharge bases, induced-representation content and
//!   the octet examples.
//! - [`heisenberg_weyl`]: displacement operators, characteristic functions,
//!   Weyl and diagonal weights.
//! - [`checker`]: stabilizer detection, the two existence conditions, and
//!   the aggregated [`checker::Verdict`].
//! - [`cli`]: command-line front end.

pub mod checker;
pub mod cli;
pub mod error;
pub mod heisenberg_weyl;
pub mod linalg;
pub mod repr_core;
pub mod su2;
pub mod su3;

pub use error::{Error, Result};
