pub mod actions;
pub mod cohomology;
pub mod error;
pub mod hopf;
pub mod lambda;
pub mod linalg;
pub mod report;
pub mod symbolic;
pub mod tensor;

pub use error::{Error, Result};
pub use linalg::{FieldSpec, Scalar, SparseMatrix};
pub use hopf::{Character, FiniteHopf, HopfAlgebra};
pub use report::CheckReport;
pub use tensor::{Combination, Element, Tensor, TensorElement};
