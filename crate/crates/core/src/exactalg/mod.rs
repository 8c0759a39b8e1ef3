//! Exact scalars over GF(p) and the rationals, dense matrices, and subspaces
//! kept in canonical reduced row echelon form.

mod field;
mod matrix;
mod subspace;

pub use field::{format_vector, Field, Scalar, Vector};
pub use matrix::Matrix;
pub use subspace::{enumerate_subspaces, enumerate_vectors, subspace_count, Subspace, VectorIter};
