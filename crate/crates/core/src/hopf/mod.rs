//! Hopf algebras: the common interface, finite-dimensional algebras given by
//! structure constants, built-in examples and the axiom checkers.
//!
//! Everything downstream (the cyclic operators, the checkers) is written
//! against [`HopfAlgebra`], so the same code runs on structure-constant
//! algebras and on the rule-based enveloping algebras of
//! [`crate::symbolic`].

pub mod builders;
pub mod checks;
pub mod finite;
pub mod presentation;

use std::fmt::Debug;

use crate::linalg::{FieldSpec, Scalar};
use crate::tensor::{Combination, Tensor};

pub use checks::{check_hopf_axioms, check_involution, check_twisted_properties, InvolutionCheck};
pub use finite::{Character, FiniteHopf};

/// A Hopf algebra presented on a (possibly infinite) ordered basis.
pub trait HopfAlgebra: Sync {
    type Basis: Clone + Ord + Debug + Send + Sync;

    fn field(&self) -> &FieldSpec;
    fn unit(&self) -> Combination<Self::Basis>;
    fn product_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Combination<Self::Basis>;
    fn coproduct_basis(&self, a: &Self::Basis) -> Tensor<Self::Basis>;
    fn counit_basis(&self, a: &Self::Basis) -> Scalar;
    fn antipode_basis(&self, a: &Self::Basis) -> Combination<Self::Basis>;
    fn label(&self, a: &Self::Basis) -> String;
}

/// A linear functional evaluated on basis elements; characters implement it.
pub trait Functional<B>: Sync {
    fn value(&self, b: &B) -> Scalar;

    fn eval(&self, a: &Combination<B>) -> Scalar
    where
        B: Ord + Clone,
    {
        let mut out = Scalar::zero();
        for (b, c) in a.iter() {
            out += &(c * &self.value(b));
        }
        out
    }
}

pub fn multiply<H: HopfAlgebra>(
    h: &H,
    a: &Combination<H::Basis>,
    b: &Combination<H::Basis>,
) -> Combination<H::Basis> {
    let mut out = Combination::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_scaled(&(c * d), &h.product_basis(x, y));
        }
    }
    out
}

pub fn coproduct<H: HopfAlgebra>(h: &H, a: &Combination<H::Basis>) -> Tensor<H::Basis> {
    let mut out = Tensor::zero(2);
    for (x, c) in a.iter() {
        out.add_scaled(c, &h.coproduct_basis(x));
    }
    out
}

pub fn counit<H: HopfAlgebra>(h: &H, a: &Combination<H::Basis>) -> Scalar {
    let mut out = Scalar::zero();
    for (x, c) in a.iter() {
        out += &(c * &h.counit_basis(x));
    }
    out
}

pub fn antipode<H: HopfAlgebra>(h: &H, a: &Combination<H::Basis>) -> Combination<H::Basis> {
    a.map_linear(|x| h.antipode_basis(x))
}

/// `Δ^{parts-1}(a)`, the iterated coproduct into `parts ≥ 1` tensor factors.
pub fn iterated_coproduct<H: HopfAlgebra>(
    h: &H,
    a: &Combination<H::Basis>,
    parts: usize,
) -> Tensor<H::Basis> {
    assert!(parts >= 1, "iterated coproduct needs at least one factor");
    let mut out = Tensor::zero(1);
    for (x, c) in a.iter() {
        out.add_term(vec![x.clone()], c.clone());
    }
    for k in 1..parts {
        // expand the last slot
        out = out.map_linear(k + 1, |tuple| {
            let (last, head) = tuple.split_last().expect("nonempty tuple");
            let mut t = Tensor::zero(k + 1);
            for (pair, c) in h.coproduct_basis(last).iter() {
                let mut key = head.to_vec();
                key.extend(pair.iter().cloned());
                t.add_term(key, c.clone());
            }
            t
        });
    }
    out
}

/// The δ-twisted antipode `S̃(a) = Σ δ(a₍₁₎) S(a₍₂₎)`.
pub fn twisted_antipode<H: HopfAlgebra, D: Functional<H::Basis>>(
    h: &H,
    delta: &D,
    a: &Combination<H::Basis>,
) -> Combination<H::Basis> {
    let mut out = Combination::zero();
    for (pair, c) in coproduct(h, a).iter() {
        let w = c * &delta.value(&pair[0]);
        if !w.is_zero() {
            out.add_scaled(&w, &h.antipode_basis(&pair[1]));
        }
    }
    out
}

/// The automorphism `σ = (δ ⊗ 1) ∘ Δ`, so that `S̃ = S ∘ σ`.
pub fn twist_automorphism<H: HopfAlgebra, D: Functional<H::Basis>>(
    h: &H,
    delta: &D,
    a: &Combination<H::Basis>,
) -> Combination<H::Basis> {
    let mut out = Combination::zero();
    for (pair, c) in coproduct(h, a).iter() {
        out.add_term(pair[1].clone(), c * &delta.value(&pair[0]));
    }
    out
}

/// Slotwise product `(a¹⊗…⊗aⁿ)·(b¹⊗…⊗bⁿ) = a¹b¹ ⊗ … ⊗ aⁿbⁿ`.
pub fn tensor_product_slotwise<H: HopfAlgebra>(
    h: &H,
    x: &Tensor<H::Basis>,
    y: &Tensor<H::Basis>,
) -> Tensor<H::Basis> {
    assert_eq!(x.degree(), y.degree(), "slotwise product of different degrees");
    let n = x.degree();
    let mut out = Tensor::zero(n);
    for (s, c) in x.iter() {
        for (t, d) in y.iter() {
            let mut partial = Tensor::scalar(c * d);
            for (a, b) in s.iter().zip(t) {
                partial = partial.tensor_element(&h.product_basis(a, b));
                if partial.is_zero() {
                    break;
                }
            }
            if !partial.is_zero() {
                out.add_scaled(&Scalar::one(), &partial);
            }
        }
    }
    out
}

/// Replaces slot `slot` of every basis tuple by the tensor `f(b)` of degree
/// `width`; `width = 0` contracts the slot with a scalar-valued map.
pub fn map_slot<B: Ord + Clone>(
    t: &Tensor<B>,
    slot: usize,
    width: usize,
    f: impl Fn(&B) -> Tensor<B>,
) -> Tensor<B> {
    assert!(slot < t.degree(), "slot {slot} out of range for degree {}", t.degree());
    let degree = t.degree() - 1 + width;
    t.map_linear(degree, |tuple| {
        let image = f(&tuple[slot]);
        let mut out = Tensor::zero(degree);
        for (mid, c) in image.iter() {
            let mut key = tuple[..slot].to_vec();
            key.extend(mid.iter().cloned());
            key.extend(tuple[slot + 1..].iter().cloned());
            out.add_term(key, c.clone());
        }
        out
    })
}

/// Multiplies slots `slot` and `slot + 1` together.
pub fn multiply_slots<H: HopfAlgebra>(h: &H, t: &Tensor<H::Basis>, slot: usize) -> Tensor<H::Basis> {
    let degree = t.degree() - 1;
    t.map_linear(degree, |tuple| {
        let mut out = Tensor::zero(degree);
        for (b, c) in h.product_basis(&tuple[slot], &tuple[slot + 1]).iter() {
            let mut key = tuple[..slot].to_vec();
            key.push(b.clone());
            key.extend(tuple[slot + 2..].iter().cloned());
            out.add_term(key, c.clone());
        }
        out
    })
}

/// Embeds an element as a degree-one tensor.
pub fn as_tensor<B: Ord + Clone>(a: &Combination<B>) -> Tensor<B> {
    Tensor::scalar(Scalar::one()).tensor_element(a)
}

/// Reads a degree-one tensor back as an element.
pub fn from_tensor<B: Ord + Clone>(t: &Tensor<B>) -> Combination<B> {
    assert_eq!(t.degree(), 1, "expected a degree-one tensor");
    t.iter().map(|(k, c)| (k[0].clone(), c.clone())).collect()
}
