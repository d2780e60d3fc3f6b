//! Group-agnostic representation machinery: realized irreps, tensor-product
//! decomposition, Clebsch–Gordan blocks, unit tensors and subgroup branching.

pub mod algebra;
pub mod irrep;
pub mod label;
pub mod subgroup;
pub mod tensor;
pub mod unit_tensor;

pub use irrep::{
    isospin_frame, realize_irrep, realize_irrep_with_cap, BasisTag, IIYLabel, RealizedIrrep, StateLabel,
    DEFAULT_DIMENSION_CAP,
};
pub use label::{Group, IrrepLabel};
pub use subgroup::{
    adapt_basis, branching_multiplicity, scalar_subspace, AdaptedBasis, AdaptedIndex, CaseTag, StabilizerSpec,
    SubIrrep, Subgroup,
};
pub use tensor::{couple_into, product_generators, tensor_decompose, CGDecomposition, CgBlock};
pub use unit_tensor::{expand_operator, resynthesize, unit_tensors, Expansion, UnitTensor, UnitTensorSet};
