//! Semisimplification into `Rep(OSp(1|2))`, fusion rules, and the Duflo–Serganova functor.

mod ds;
mod fusion;
mod hinich;
mod objects;
mod phi;

pub use ds::{ds_algebra, ds_module, ds_representation, rank_one_odd, DsAlgebra, DsModule};
pub use fusion::{
    chain_module, check_fusion_pair, ga11_fusion, ga11_module, osp_fusion, tensor_operator,
    verify_ga11_fusion, FusionCheck,
};
pub use hinich::{hinich_witness, HinichWitness};
pub use objects::{semisimplify, Ga11Object, SemisimpleObject};
pub use phi::{
    osp_decompose, phi_general, phi_nilpotent, phi_of_operator, restrict_to_nilpotent_part,
    solve_lowering, t_functor, t_functor_over,
};
