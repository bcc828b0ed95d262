//! Hopf actions on algebras, traces, the characteristic map and the
//! pairing with idempotents.

pub mod action;
pub mod algebra;
pub mod cochain;
pub mod pairing;
pub mod presentation;

pub use action::{
    check_action, check_delta_invariance, check_gamma_morphism, characteristic_map, gamma_matrix, HopfAction, Trace,
};
pub use algebra::FiniteAlgebra;
pub use cochain::{check_cyclic_cocycle, Cochain};
pub use pairing::{
    conjugate, pair_idempotent, random_element, random_similarity, trace_extension, AlgebraMatrix,
};
pub use presentation::{load_action_file, parse_action_file, ActionData, ActionFile};
