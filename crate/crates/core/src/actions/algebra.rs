//! Finite-dimensional unital associative algebras.

use crate::error::{Error, Result};
use crate::hopf::FiniteHopf;
use crate::linalg::{FieldSpec, Scalar};
use crate::tensor::{format_combination, Element};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    field: FieldSpec,
    labels: Vec<String>,
    unit: Element,
    /// `product[i * dim + j] = eᵢ·eⱼ`
    product: Vec<Element>,
}

impl FiniteAlgebra {
    /// Checks associativity and the unit law on all basis triples.
    pub fn new(name: &str, field: FieldSpec, labels: Vec<String>, unit: Element, product: Vec<Element>) -> Result<Self> {
        let d = labels.len();
        if d == 0 || product.len() != d * d {
            return Err(Error::DimensionMismatch(format!("{} products for dimension {d}", product.len())));
        }
        if product.iter().chain([&unit]).any(|e| e.iter().any(|(k, _)| *k >= d)) {
            return Err(Error::IndexOutOfRange("product index beyond dimension".into()));
        }
        let a = FiniteAlgebra { name: name.into(), field, labels, unit, product };
        for i in 0..d {
            let e = Element::basis(i);
            if a.multiply(&a.unit, &e) != e || a.multiply(&e, &a.unit) != e {
                return Err(Error::InvalidAlgebra(format!("unit law fails at {}", a.labels[i])));
            }
            for j in 0..d {
                for k in 0..d {
                    let lhs = a.multiply(a.product_of(i, j), &Element::basis(k));
                    let rhs = a.multiply(&e, a.product_of(j, k));
                    if lhs != rhs {
                        return Err(Error::InvalidAlgebra(format!(
                            "associativity fails at ({}, {}, {})",
                            a.labels[i], a.labels[j], a.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(a)
    }

    /// The ground field `k`.
    pub fn scalars() -> Self {
        FiniteAlgebra::new("Q", FieldSpec::Rational, vec!["1".into()], Element::basis(0), vec![Element::basis(0)])
            .expect("k is an algebra")
    }

    /// `M_k(ℚ)` on matrix units `e_ij`, index `i·k + j`.
    pub fn matrix_algebra(k: usize) -> Self {
        let d = k * k;
        let mut product = Vec::with_capacity(d * d);
        for p in 0..d {
            for q in 0..d {
                let (i, j, l, m) = (p / k, p % k, q / k, q % k);
                product.push(if j == l { Element::basis(i * k + m) } else { Element::zero() });
            }
        }
        let labels = (0..d).map(|p| format!("e{}{}", p / k + 1, p % k + 1)).collect();
        let unit = (0..k).map(|i| (i * k + i, Scalar::one())).collect();
        FiniteAlgebra::new(&format!("M{k}(Q)"), FieldSpec::Rational, labels, unit, product).expect("matrix algebra")
    }

    /// The underlying algebra of a Hopf algebra.
    pub fn from_hopf(h: &FiniteHopf) -> Result<Self> {
        let d = h.dim();
        let product = (0..d * d).map(|p| h.product_of(p / d, p % d).clone()).collect();
        FiniteAlgebra::new(
            h.name(),
            crate::hopf::HopfAlgebra::field(h).clone(),
            h.labels().to_vec(),
            h.unit_element().clone(),
            product,
        )
    }

    /// Functions on `ℤ/n` with pointwise product, basis the point indicators `p0, p1, …`.
    pub fn functions_on_cyclic(n: usize) -> Self {
        let product = (0..n * n)
            .map(|p| if p / n == p % n { Element::basis(p / n) } else { Element::zero() })
            .collect();
        FiniteAlgebra::new(
            &format!("Q^(Z/{n})"),
            FieldSpec::Rational,
            (0..n).map(|i| format!("p{i}")).collect(),
            (0..n).map(|i| (i, Scalar::one())).collect(),
            product,
        )
        .expect("function algebra")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn product_of(&self, i: usize, j: usize) -> &Element {
        &self.product[i * self.dim() + j]
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (i, c) in a.iter() {
            for (j, d) in b.iter() {
                out.add_scaled(&(c * d), self.product_of(*i, *j));
            }
        }
        out
    }

    pub fn show(&self, a: &Element) -> String {
        format_combination(a, |i| self.labels[*i].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_units_multiply() {
        let m = FiniteAlgebra::matrix_algebra(2);
        // e12·e21 = e11, e21·e12 = e22
        assert_eq!(m.product_of(1, 2), &Element::basis(0));
        assert_eq!(m.product_of(2, 1), &Element::basis(3));
        assert_eq!(m.product_of(1, 1), &Element::zero());
    }

    #[test]
    fn unit_law_is_checked() {
        // k[a]/(a² − a − 1) is fine with unit e0, but not with e1 as unit
        let product = vec![
            Element::basis(0),
            Element::basis(1),
            Element::basis(1),
            Element::from_terms([(0, Scalar::one()), (1, Scalar::one())]),
        ];
        let labels = vec!["1".to_string(), "a".to_string()];
        assert!(FiniteAlgebra::new("ok", FieldSpec::Rational, labels.clone(), Element::basis(0), product.clone()).is_ok());
        assert!(FiniteAlgebra::new("bad", FieldSpec::Rational, labels, Element::basis(1), product).is_err());
    }
}
