//! Super vector spaces and parity-homogeneous linear maps.
//!
//! Bases are always in canonical order: the even block first, then the odd block.

mod hom;
mod space;
mod subquotient;

pub use hom::{braiding, direct_sum_maps, evaluation, tensor_maps, HomMap};
pub use space::{direct_sum, dual, tensor, DirectSum, Parity, SuperDim, SuperSpace, TensorProduct};
pub use subquotient::{graded_basis, Subquotient};
