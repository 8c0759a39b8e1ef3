//! Exact computations on finite-dimensional evolution algebras.
//!
//! An evolution algebra is stored by its structure matrix in row convention:
//! row `i` holds the coordinates of `e_i²` in the defining natural basis.
//! Everything decidable by finite enumeration works over GF(p); over the
//! rationals the library computes what linear algebra can decide exactly and
//! reports `Undecided` elsewhere.

pub mod algebra;
pub mod error;
pub mod evlattice;
pub mod exactalg;
pub mod ideals;
pub mod idempotents;
pub mod limits;
pub mod natural;
pub mod socle;

pub use algebra::{make_example, Element, EvolutionAlgebra, Family, TriangularVariant};
pub use error::{Error, Result};
pub use exactalg::{Field, Matrix, Scalar, Subspace, Vector};
pub use limits::Limits;
pub use natural::{Decision, Search};
