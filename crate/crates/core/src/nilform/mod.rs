//! Normal form of an odd nilpotent operator: blocks, neatness, Deligne filtration.

mod blocks;
mod filtration;

pub use blocks::{
    adapted_basis, block_multiplicities, is_neat_on, BlockDecomposition, BlockType, Chain,
    OddNilpotent, PivotOrder,
};
pub use filtration::{
    deligne_filtration, deligne_filtration_with, graded_piece, grading_operator,
    odd_weights_vanish, verify_deligne, Filtration,
};
