//! The cyclic category, its two modules, and the relation suites.

pub mod module;
pub mod morphism;
pub mod relations;

pub use module::{
    cyclic_power_closed_form, hopf_cyclic, hopf_degeneracy, hopf_face, hopf_generator, hopf_word, interpret_word,
    AlgebraCochainModule, CyclicModule, HopfCyclicModule,
};
pub use morphism::{Generator, LambdaMorphism, Word};
pub use relations::{
    check_cyclic_power_formula, check_functoriality, check_relations, check_relations_lambda,
    check_relations_on_sample, pbw_sample, random_tensor, relation_instances, RelationInstance,
};
