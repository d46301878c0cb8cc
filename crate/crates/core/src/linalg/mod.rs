//! Exact dense and sparse rational linear algebra.

mod matrix;
mod solve;

pub use matrix::{kronecker, RationalMatrix};
pub use solve::{
    commutant_basis, inertia, kernel_basis, normalize_vector, rank, rank_of_vectors, solve_in_span,
    Echelon, LinearSystem,
};
