//! Lie superalgebras by structure constants and their representations.

mod algebra;
mod minuscule;
mod presets;
mod rep;

pub use algebra::{Element, LieSuperAlgebra};
pub use minuscule::{minuscule_data, MinusculeData};
pub use presets::{
    chain_space, gl_superalgebra, lowering_coefficients, osp12, osp_simple, osp_simple_over,
};
pub use rep::{adjoint_rep, Representation};
