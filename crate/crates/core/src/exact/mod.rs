//! Exact rational arithmetic: scalars, dense matrices, linear solving,
//! univariate polynomials and the Jordan–Chevalley decomposition.

mod jc;
mod linsolve;
mod matrix;
mod poly;
mod rational;

pub use jc::jordan_chevalley;
pub use linsolve::{kernel_basis, rank, rref, solve_affine, SpanBuilder};
pub use matrix::Matrix;
pub use poly::{min_poly, squarefree_part, Polynomial};
pub use rational::{format_rational, int, parse_rational, ratio, Rational};
