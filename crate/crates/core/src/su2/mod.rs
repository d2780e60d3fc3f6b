//! SU(2): exact Clebsch–Gordan coefficients, the three single-irrep fiducial
//! examples and a sphere-quadrature oracle.

pub mod examples;
pub mod exact;
pub mod sphere;

pub use examples::{generic_fiducial, pi_matrix_example1, pi_matrix_example2, pi_matrix_example3, PiColumn, PiScalar};
pub use exact::{racah_block, racah_cg, ExactCG};
pub use sphere::{fourier_oracle_rho, harmonics, resynthesize_rho, section, SphereGrid, DEFAULT_ORDER};
