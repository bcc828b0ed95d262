//! Rule-based Hopf algebras: `U(g)` presented on its PBW basis.

pub mod lie;
pub mod pbw;

pub use lie::{load_lie, parse_lie, LieAlgebra};
pub use pbw::{Envelope, LieCharacter, Monomial, SymbolicElement};
