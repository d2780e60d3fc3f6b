//! The Heisenberg–Weyl group on a truncated Fock space: displacement
//! operators, characteristic functions of fiducial states, the nonvanishing
//! test and the transform from Weyl coefficients to a diagonal weight.

mod condition;
mod fiducial;
mod fock;
mod grid;
mod laguerre;
mod weyl;

pub use condition::{check_nonvanishing, classify, sample_char, ConditionReport, DEFAULT_THRESHOLD, NOISE_FLOOR};
pub use fiducial::{char_function, CharValue, FiducialKind, FiducialState};
pub use fock::{displacement, displacement_block, Displacement, FockOperator, FockSpace};
pub use grid::PhaseGrid;
pub use laguerre::{generalized_laguerre, laguerre, laguerre_zeros_in, zero_locus, zero_radii_in, RadialWindow};
pub use weyl::{
    diagonal_weight, diagonal_weight_with, resynthesize_weyl, thermal_operator, weyl_coefficients, DiagonalWeight, WeylCoefficients,
    DEFAULT_AMPLIFICATION_BOUND, PARSEVAL_WARN,
};
