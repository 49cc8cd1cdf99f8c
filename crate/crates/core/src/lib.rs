//! Exact computations for odd elements of Lie superalgebras.
//!
//! The pipeline: an odd nilpotent operator is put into block normal form
//! (indecomposables `M_k` of the additive supergroup `𝔾ₐ^(1|1)`), its Deligne
//! filtration is computed, and the semisimplification functor sends the module
//! to a multiset of simple `OSp(1|2)`-modules. For odd elements of a Lie
//! superalgebra this yields the functor `Φ_x`, neatness certificates, explicit
//! `osp(1|2)`-triples `(h, x, Y)`, and the Duflo–Serganova reduction.
//!
//! All arithmetic is over ℚ and every result is exact.

pub mod checks;
pub mod error;
pub mod exact;
pub mod functors;
pub mod jm;
pub mod json;
pub mod liesuper;
pub mod nilform;
pub mod sampling;
pub mod superlinalg;

pub use error::{Error, Result};
pub use exact::{Matrix, Polynomial, Rational};
pub use liesuper::{Element, LieSuperAlgebra, Representation};
pub use superlinalg::{HomMap, Parity, SuperDim, SuperSpace};
