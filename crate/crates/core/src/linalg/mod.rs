//! Exact fields and sparse linear algebra.

pub mod cyclotomic;
pub mod elimination;
pub mod scalar;
pub mod sparse;

pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use elimination::{kernel_basis, kernel_basis_with, kernel_matrix, rank, rank_with, EliminationConfig};
pub use scalar::{FieldSpec, Scalar};
pub use sparse::{SparseMatrix, SparseVec};
