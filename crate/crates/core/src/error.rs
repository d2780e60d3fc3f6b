use thiserror::Error;

use crate::repr_core::IrrepLabel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid irrep label: {0}")]
    InvalidLabel(String),

    #[error("irrep {label} has dimension {dimension}, above the cap of {cap}")]
    DimensionCap {
        label: IrrepLabel,
        dimension: usize,
        cap: usize,
    },

    #[error("representations belong to different groups: {0} and {1}")]
    GroupMismatch(IrrepLabel, IrrepLabel),

    #[error(
        "unresolved degeneracy near eigenvalue {eigenvalue:.6}: cluster of size {found}, \
         expected {expected}"
    )]
    Degeneracy {
        eigenvalue: f64,
        expected: usize,
        found: usize,
    },

    #[error("numerical construction failed: {0}")]
    Numerical(String),

    #[error("subgroup {subgroup} is not supported for {group}")]
    UnsupportedSubgroup { subgroup: String, group: String },

    #[error("unsupported stabilizer: {0}")]
    UnsupportedStabilizer(String),

    #[error("vector has norm {0}, expected a unit vector")]
    NotUnitNorm(f64),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("fiducial vector is not scalar under the declared stabilizer {0}")]
    NotSubgroupScalar(String),

    #[error("quadrature order {order} too low, need at least {required}")]
    GridTooCoarse { order: usize, required: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("expected {expected} zeros inside the radial window, found {found}")]
    ZeroCountMismatch { expected: usize, found: usize },

    #[error(
        "characteristic function vanishes: {} grid points flagged, zero circles at radii {:?}",
        points.len(),
        circles
    )]
    ConditionViolated {
        points: Vec<(f64, f64)>,
        circles: Vec<f64>,
    },
}
