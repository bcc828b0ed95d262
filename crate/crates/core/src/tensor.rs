//! Sparse linear combinations of basis elements and of basis tuples.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::{Scalar, SparseVec};

/// A finite linear combination `Σ c·b` over an ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination<B: Ord> {
    terms: BTreeMap<B, Scalar>,
}

/// An element of a finite-dimensional algebra (basis indices).
pub type Element = Combination<usize>;

impl<B: Ord + Clone> Combination<B> {
    pub fn zero() -> Self {
        Combination { terms: BTreeMap::new() }
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, Scalar::one())
    }

    pub fn term(b: B, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (B, Scalar)>) -> Self {
        let mut out = Self::zero();
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    pub fn add_term(&mut self, b: B, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    /// `self += a·other`.
    pub fn add_scaled(&mut self, a: &Scalar, other: &Self) {
        for (b, c) in &other.terms {
            self.add_term(b.clone(), a * c);
        }
    }

    pub fn scaled(&self, a: &Scalar) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Combination { terms: self.terms.iter().map(|(b, c)| (b.clone(), a * c)).collect() }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), other);
        out
    }

    pub fn coeff(&self, b: &B) -> Scalar {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Scalar)> {
        self.terms.iter()
    }

    /// Linear extension of `f` from basis elements.
    pub fn map_linear<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> Combination<C>) -> Combination<C> {
        let mut out = Combination::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b));
        }
        out
    }
}

impl Element {
    /// Dense coefficient vector of length `dim`.
    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); dim];
        for (i, c) in &self.terms {
            v[*i] = c.clone();
        }
        v
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        Self::from_terms(v.iter().cloned().enumerate())
    }

    pub fn to_sparse(&self) -> SparseVec {
        self.terms.iter().map(|(i, c)| (*i, c.clone())).collect()
    }
}

impl<B: Ord + Clone> FromIterator<(B, Scalar)> for Combination<B> {
    fn from_iter<T: IntoIterator<Item = (B, Scalar)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}

/// A sparse element of `H^{⊗n}`; keys are basis tuples of length `degree`.
/// Degree zero is the ground field, keyed by the empty tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<B: Ord> {
    degree: usize,
    terms: BTreeMap<Vec<B>, Scalar>,
}

/// A tensor over the basis of a finite-dimensional algebra.
pub type TensorElement = Tensor<usize>;

impl<B: Ord + Clone> Tensor<B> {
    pub fn zero(degree: usize) -> Self {
        Tensor { degree, terms: BTreeMap::new() }
    }

    /// The scalar `c` as a degree-zero tensor.
    pub fn scalar(c: Scalar) -> Self {
        let mut out = Self::zero(0);
        out.add_term(Vec::new(), c);
        out
    }

    pub fn basis(tuple: Vec<B>) -> Self {
        let mut out = Self::zero(tuple.len());
        out.add_term(tuple, Scalar::one());
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, tuple: Vec<B>, c: Scalar) {
        assert_eq!(tuple.len(), self.degree, "tensor tuple length must equal degree");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&tuple) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&tuple);
                }
            }
            None => {
                self.terms.insert(tuple, c);
            }
        }
    }

    pub fn add_scaled(&mut self, a: &Scalar, other: &Self) {
        assert_eq!(self.degree, other.degree, "adding tensors of different degree");
        for (t, c) in &other.terms {
            self.add_term(t.clone(), a * c);
        }
    }

    pub fn scaled(&self, a: &Scalar) -> Self {
        let mut out = Self::zero(self.degree);
        out.add_scaled(a, self);
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), other);
        out
    }

    pub fn coeff(&self, tuple: &[B]) -> Scalar {
        self.terms.get(tuple).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<B>, &Scalar)> {
        self.terms.iter()
    }

    /// Tensor product of pure factors `a₁ ⊗ … ⊗ aₙ`.
    pub fn from_factors(factors: &[Combination<B>]) -> Self {
        let mut out = Self::scalar(Scalar::one());
        for f in factors {
            out = out.tensor_element(f);
        }
        out
    }

    /// `self ⊗ a`, appending one slot.
    pub fn tensor_element(&self, a: &Combination<B>) -> Self {
        let mut out = Self::zero(self.degree + 1);
        for (t, c) in &self.terms {
            for (b, d) in a.iter() {
                let mut tuple = t.clone();
                tuple.push(b.clone());
                out.add_term(tuple, c * d);
            }
        }
        out
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (t, c) in &self.terms {
            for (u, d) in &other.terms {
                let mut tuple = t.clone();
                tuple.extend(u.iter().cloned());
                out.add_term(tuple, c * d);
            }
        }
        out
    }

    /// Linear extension of `f` from basis tuples.
    pub fn map_linear<C: Ord + Clone>(&self, degree: usize, mut f: impl FnMut(&[B]) -> Tensor<C>) -> Tensor<C> {
        let mut out = Tensor::zero(degree);
        for (t, c) in &self.terms {
            out.add_scaled(c, &f(t));
        }
        out
    }
}

/// Lexicographic index of a basis tuple in `H^{⊗n}` with `dim H = d`.
pub fn tuple_index(tuple: &[usize], dim: usize) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * dim + i)
}

/// Inverse of [`tuple_index`].
pub fn index_tuple(mut index: usize, dim: usize, degree: usize) -> Vec<usize> {
    let mut out = vec![0; degree];
    for slot in out.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
    out
}

impl TensorElement {
    /// Coordinates in the lexicographic basis of `H^{⊗n}`.
    pub fn to_sparse(&self, dim: usize) -> SparseVec {
        let mut v: SparseVec =
            self.terms.iter().map(|(t, c)| (tuple_index(t, dim), c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn from_sparse(v: &[(usize, Scalar)], dim: usize, degree: usize) -> Self {
        let mut out = Self::zero(degree);
        for (i, c) in v {
            out.add_term(index_tuple(*i, dim, degree), c.clone());
        }
        out
    }
}

/// Formats `Σ c·(b₁⊗…⊗bₙ)` using a label function for basis elements.
pub fn format_tensor<B: Ord + Clone>(t: &Tensor<B>, label: impl Fn(&B) -> String) -> String {
    if t.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = t
        .iter()
        .map(|(tuple, c)| {
            let body = if tuple.is_empty() {
                "1".to_string()
            } else {
                tuple.iter().map(&label).collect::<Vec<_>>().join("⊗")
            };
            if c.is_one() {
                body
            } else {
                format!("({c})*{body}")
            }
        })
        .collect();
    parts.join(" + ")
}

pub fn format_combination<B: Ord + Clone>(a: &Combination<B>, label: impl Fn(&B) -> String) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = a
        .iter()
        .map(|(b, c)| if c.is_one() { label(b) } else { format!("({c})*{}", label(b)) })
        .collect();
    parts.join(" + ")
}

impl<B: Ord + Clone + fmt::Display> fmt::Display for Tensor<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_tensor(self, |b| b.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_indexing_roundtrip() {
        for i in 0..64 {
            assert_eq!(tuple_index(&index_tuple(i, 4, 3), 4), i);
        }
        assert_eq!(index_tuple(0, 4, 0), Vec::<usize>::new());
        assert_eq!(tuple_index(&[], 4), 0);
    }

    #[test]
    fn cancellation_leaves_no_zeros() {
        let mut a = Element::basis(1);
        a.add_term(1, Scalar::from_int(-1));
        assert!(a.is_zero());
        let t = TensorElement::basis(vec![0, 1]);
        assert!(t.minus(&t).is_zero());
    }

    #[test]
    fn factor_product() {
        let a = Element::from_terms([(0, Scalar::one()), (1, Scalar::from_int(2))]);
        let b = Element::basis(1);
        let t = TensorElement::from_factors(&[a, b]);
        assert_eq!(t.coeff(&[1, 1]), Scalar::from_int(2));
        assert_eq!(t.len(), 2);
    }
}
