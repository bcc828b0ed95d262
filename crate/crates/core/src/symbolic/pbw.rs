//! The enveloping algebra `U(g)` on its PBW basis.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num::BigInt;

use crate::error::{Error, Result};
use crate::hopf::{Functional, HopfAlgebra};
use crate::linalg::{FieldSpec, Scalar};
use crate::tensor::{Combination, Tensor};

use super::lie::LieAlgebra;

/// `X₁^{a₁}⋯Xₙ^{aₙ}`, stored as the exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// The generators in PBW order, with repetition.
    pub fn word(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(i, &a)| std::iter::repeat_n(i, a as usize)).collect()
    }
}

pub type SymbolicElement = Combination<Monomial>;

/// `U(g)` with primitive generators, `S(X) = −X`.
pub struct Envelope {
    lie: LieAlgebra,
    /// memo for `m · Xₖ`
    cache: Mutex<HashMap<(Monomial, usize), SymbolicElement>>,
}

impl fmt::Debug for Envelope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Envelope").field("lie", &self.lie).finish()
    }
}

impl Envelope {
    pub fn new(lie: LieAlgebra) -> Self {
        Envelope { lie, cache: Mutex::new(HashMap::new()) }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn n(&self) -> usize {
        self.lie.dim()
    }

    pub fn generator(&self, i: usize) -> SymbolicElement {
        Combination::basis(Monomial::generator(self.n(), i))
    }

    pub fn monomial(&self, exponents: &[u32]) -> Result<SymbolicElement> {
        if exponents.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "{} exponents for {} generators",
                exponents.len(),
                self.n()
            )));
        }
        Ok(Combination::basis(Monomial(exponents.to_vec())))
    }

    /// All PBW monomials of degree at most `d`, ordered by degree then exponents.
    pub fn monomials_up_to(&self, d: u32) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(self.n())];
        let mut layer = out.clone();
        for _ in 0..d {
            let mut next = Vec::new();
            for m in &layer {
                // extend only at or after the last nonzero slot to avoid repeats
                let start = m.0.iter().rposition(|&a| a > 0).unwrap_or(0);
                for i in start..self.n() {
                    let mut e = m.0.clone();
                    e[i] += 1;
                    next.push(Monomial(e));
                }
            }
            next.sort_by(|a, b| b.cmp(a));
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// `m · Xₖ` straightened: if `m = m'Xⱼ` with `j > k`, then
    /// `m'XⱼXₖ = (m'Xₖ)Xⱼ + m'[Xⱼ,Xₖ]`. Degree never grows and the number
    /// of out-of-order pairs drops, so the recursion terminates.
    fn times_generator(&self, m: &Monomial, k: usize) -> SymbolicElement {
        let key = (m.clone(), k);
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let out = match m.0.iter().rposition(|&a| a > 0) {
            Some(j) if j > k => {
                let mut prefix = m.clone();
                prefix.0[j] -= 1;
                let mut out = self.times_generator(&prefix, k).map_linear(|p| self.times_generator(p, j));
                for (l, c) in self.lie.bracket(j, k).iter() {
                    out.add_scaled(c, &self.times_generator(&prefix, *l));
                }
                out
            }
            _ => {
                let mut e = m.clone();
                e.0[k] += 1;
                Combination::basis(e)
            }
        };
        self.cache.lock().expect("cache lock").insert(key, out.clone());
        out
    }

    fn times_word(&self, a: &SymbolicElement, word: &[usize]) -> SymbolicElement {
        let mut out = a.clone();
        for &k in word {
            out = out.map_linear(|m| self.times_generator(m, k));
        }
        out
    }

    pub fn multiply(&self, a: &SymbolicElement, b: &SymbolicElement) -> SymbolicElement {
        let mut out = Combination::zero();
        for (m, c) in b.iter() {
            out.add_scaled(c, &self.times_word(a, &m.word()));
        }
        out
    }

    pub fn label_of(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.0.iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                let l = &self.lie.labels()[i];
                if a == 1 {
                    l.clone()
                } else {
                    format!("{l}^{a}")
                }
            })
            .collect::<Vec<_>>()
            .join("")
    }

    /// The adjoint-trace character `δ(Xᵢ) = tr(ad Xᵢ)`.
    pub fn modular_character(&self) -> LieCharacter {
        LieCharacter { values: (0..self.n()).map(|i| self.lie.ad_trace(i)).collect() }
    }

    /// A character with prescribed generator values; it must vanish on
    /// brackets since `δ(XY − YX) = 0`.
    pub fn character(&self, values: Vec<Scalar>) -> Result<LieCharacter> {
        if values.len() != self.n() {
            return Err(Error::InvalidCharacter(format!("{} values for {} generators", values.len(), self.n())));
        }
        let delta = LieCharacter { values };
        for i in 0..self.n() {
            for j in 0..self.n() {
                let mut v = Scalar::zero();
                for (k, c) in self.lie.bracket(i, j).iter() {
                    v += &(c * &delta.values[*k]);
                }
                if !v.is_zero() {
                    return Err(Error::InvalidCharacter(format!(
                        "δ([{}, {}]) = {v} ≠ 0",
                        self.lie.labels()[i],
                        self.lie.labels()[j]
                    )));
                }
            }
        }
        Ok(delta)
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut out = BigInt::from(1);
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

impl HopfAlgebra for Envelope {
    type Basis = Monomial;

    fn field(&self) -> &FieldSpec {
        self.lie.field()
    }

    fn unit(&self) -> SymbolicElement {
        Combination::basis(Monomial::one(self.n()))
    }

    fn product_basis(&self, a: &Monomial, b: &Monomial) -> SymbolicElement {
        self.times_word(&Combination::basis(a.clone()), &b.word())
    }

    /// `Δ(X^a) = Σ_{t ≤ a} Πᵢ C(aᵢ, tᵢ) X^t ⊗ X^{a−t}`.
    fn coproduct_basis(&self, a: &Monomial) -> Tensor<Monomial> {
        let mut splits: Vec<(Vec<u32>, BigInt)> = vec![(Vec::new(), BigInt::from(1))];
        for &ai in &a.0 {
            splits = splits
                .into_iter()
                .flat_map(|(t, c)| {
                    (0..=ai).map(move |ti| {
                        let mut t = t.clone();
                        t.push(ti);
                        (t, &c * binomial(ai, ti))
                    })
                })
                .collect();
        }
        let mut out = Tensor::zero(2);
        for (t, c) in splits {
            let rest = a.0.iter().zip(&t).map(|(x, y)| x - y).collect();
            out.add_term(vec![Monomial(t), Monomial(rest)], Scalar::Rational(c.into()));
        }
        out
    }

    fn counit_basis(&self, a: &Monomial) -> Scalar {
        if a.is_one() {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    /// `S(X₁^{a₁}⋯Xₙ^{aₙ}) = (−1)^{deg} Xₙ^{aₙ}⋯X₁^{a₁}`, straightened.
    fn antipode_basis(&self, a: &Monomial) -> SymbolicElement {
        let mut word = a.word();
        word.reverse();
        let sign = if a.degree().is_multiple_of(2) { Scalar::one() } else { Scalar::from_int(-1) };
        self.times_word(&Combination::term(Monomial::one(self.n()), sign), &word)
    }

    fn label(&self, a: &Monomial) -> String {
        self.label_of(a)
    }
}

/// A character of `U(g)`, determined by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieCharacter {
    values: Vec<Scalar>,
}

impl LieCharacter {
    pub fn generator_values(&self) -> &[Scalar] {
        &self.values
    }
}

impl Functional<Monomial> for LieCharacter {
    fn value(&self, m: &Monomial) -> Scalar {
        let mut out = Scalar::one();
        for (v, &a) in self.values.iter().zip(&m.0) {
            out = &out * &v.pow(a);
        }
        out
    }
}
