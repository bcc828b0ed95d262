use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar, SparseMatrix};
use crate::tensor::{Element, Tensor, TensorElement};

use super::{Functional, HopfAlgebra};

/// A finite-dimensional Hopf algebra given by structure constants.
///
/// Construction only checks shapes and field membership; whether the data
/// actually satisfies the Hopf axioms is the job of
/// [`super::check_hopf_axioms`], so deliberately broken presentations can be
/// built as negative controls.
#[derive(Clone, Debug)]
pub struct FiniteHopf {
    name: String,
    field: FieldSpec,
    labels: Vec<String>,
    unit: Element,
    /// `product[i * dim + j] = eᵢ·eⱼ`
    product: Vec<Element>,
    coproduct: Vec<TensorElement>,
    counit: Vec<Scalar>,
    antipode: Vec<Element>,
    characters: BTreeMap<String, Vec<Scalar>>,
}

/// Raw structure constants for [`FiniteHopf::from_parts`].
#[derive(Clone, Debug)]
pub struct HopfParts {
    pub name: String,
    pub field: FieldSpec,
    pub labels: Vec<String>,
    pub unit: Element,
    pub product: Vec<Element>,
    pub coproduct: Vec<TensorElement>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Element>,
    /// Named candidate characters; validated only when requested.
    pub characters: BTreeMap<String, Vec<Scalar>>,
}

fn check_element(e: &Element, dim: usize, field: &FieldSpec, what: &str) -> Result<()> {
    for (i, c) in e.iter() {
        if *i >= dim {
            return Err(Error::IndexOutOfRange(format!("{what}: basis index {i} >= {dim}")));
        }
        if !c.belongs_to(field) {
            return Err(Error::FieldMismatch(c.field().to_string(), field.to_string()));
        }
    }
    Ok(())
}

impl FiniteHopf {
    pub fn from_parts(parts: HopfParts) -> Result<Self> {
        let dim = parts.labels.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch("Hopf algebra must have positive dimension".into()));
        }
        let field = &parts.field;
        let sizes = [
            ("product", parts.product.len(), dim * dim),
            ("coproduct", parts.coproduct.len(), dim),
            ("counit", parts.counit.len(), dim),
            ("antipode", parts.antipode.len(), dim),
        ];
        for (what, got, want) in sizes {
            if got != want {
                return Err(Error::DimensionMismatch(format!("{what}: {got} entries, expected {want}")));
            }
        }
        check_element(&parts.unit, dim, field, "unit")?;
        for e in parts.product.iter().chain(&parts.antipode) {
            check_element(e, dim, field, "structure constant")?;
        }
        for t in &parts.coproduct {
            if t.degree() != 2 {
                return Err(Error::DimensionMismatch("coproduct must have degree 2".into()));
            }
            for (tuple, c) in t.iter() {
                if tuple.iter().any(|&i| i >= dim) {
                    return Err(Error::IndexOutOfRange(format!("coproduct index in {tuple:?}")));
                }
                if !c.belongs_to(field) {
                    return Err(Error::FieldMismatch(c.field().to_string(), field.to_string()));
                }
            }
        }
        for c in parts.counit.iter().chain(parts.characters.values().flatten()) {
            if !c.belongs_to(field) {
                return Err(Error::FieldMismatch(c.field().to_string(), field.to_string()));
            }
        }
        Ok(FiniteHopf {
            name: parts.name,
            field: parts.field,
            labels: parts.labels,
            unit: parts.unit,
            product: parts.product,
            coproduct: parts.coproduct,
            counit: parts.counit,
            antipode: parts.antipode,
            characters: parts.characters,
        })
    }

    pub fn into_parts(self) -> HopfParts {
        HopfParts {
            name: self.name,
            field: self.field,
            labels: self.labels,
            unit: self.unit,
            product: self.product,
            coproduct: self.coproduct,
            counit: self.counit,
            antipode: self.antipode,
            characters: self.characters,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// All basis indices, the natural sample for the checkers.
    pub fn basis(&self) -> Vec<usize> {
        (0..self.dim()).collect()
    }

    pub fn character_names(&self) -> impl Iterator<Item = &str> {
        self.characters.keys().map(String::as_str)
    }

    /// A named character; `epsilon` always resolves to the counit.
    pub fn character(&self, name: &str) -> Result<Character> {
        match self.characters.get(name) {
            Some(values) => Character::new(self, values.clone()),
            None if name == "epsilon" => Character::counit(self),
            None => Err(Error::InvalidCharacter(format!("no character named {name:?}"))),
        }
    }

    pub fn with_character(mut self, name: &str, values: Vec<Scalar>) -> Self {
        self.characters.insert(name.to_string(), values);
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit_element(&self) -> &Element {
        &self.unit
    }

    pub fn product_of(&self, i: usize, j: usize) -> &Element {
        &self.product[i * self.dim() + j]
    }

    pub fn coproduct_of(&self, i: usize) -> &TensorElement {
        &self.coproduct[i]
    }

    pub fn counit_of(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn antipode_of(&self, i: usize) -> &Element {
        &self.antipode[i]
    }

    /// Replaces `S(eᵢ)`; used to build corrupted negative controls.
    pub fn with_antipode(mut self, i: usize, image: Element) -> Self {
        self.antipode[i] = image;
        self
    }

    /// The matrix of a linear endomorphism given on basis elements.
    pub fn matrix_of(&self, f: impl Fn(usize) -> Element) -> SparseMatrix {
        let cols = (0..self.dim()).map(|i| f(i).to_sparse()).collect();
        SparseMatrix::from_columns(self.dim(), cols).expect("images lie in H")
    }

    pub fn antipode_matrix(&self) -> SparseMatrix {
        self.matrix_of(|i| self.antipode[i].clone())
    }

    /// Checks that `elem` is a valid element of this algebra.
    pub fn check_element(&self, elem: &Element) -> Result<()> {
        check_element(elem, self.dim(), &self.field, "element")
    }
}

impl HopfAlgebra for FiniteHopf {
    type Basis = usize;

    fn field(&self) -> &FieldSpec {
        &self.field
    }

    fn unit(&self) -> Element {
        self.unit.clone()
    }

    fn product_basis(&self, a: &usize, b: &usize) -> Element {
        self.product[a * self.dim() + b].clone()
    }

    fn coproduct_basis(&self, a: &usize) -> Tensor<usize> {
        self.coproduct[*a].clone()
    }

    fn counit_basis(&self, a: &usize) -> Scalar {
        self.counit[*a].clone()
    }

    fn antipode_basis(&self, a: &usize) -> Element {
        self.antipode[*a].clone()
    }

    fn label(&self, a: &usize) -> String {
        self.labels[*a].clone()
    }
}

/// A character `δ: H → k`, validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: Vec<Scalar>,
}

impl Character {
    /// Validates `δ(1) = 1` and `δ(eᵢeⱼ) = δ(eᵢ)δ(eⱼ)` on all basis pairs.
    pub fn new(h: &FiniteHopf, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != h.dim() {
            return Err(Error::InvalidCharacter(format!(
                "{} values for a {}-dimensional algebra",
                values.len(),
                h.dim()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.belongs_to(h.field())) {
            return Err(Error::FieldMismatch(v.field().to_string(), h.field().to_string()));
        }
        let delta = Character { values };
        if !delta.eval(h.unit_element()).is_one() {
            return Err(Error::InvalidCharacter("δ(1) ≠ 1".into()));
        }
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let lhs = delta.eval(h.product_of(i, j));
                let rhs = &delta.values[i] * &delta.values[j];
                if lhs != rhs {
                    return Err(Error::InvalidCharacter(format!(
                        "δ({}·{}) = {lhs} but δ({})δ({}) = {rhs}",
                        h.labels()[i],
                        h.labels()[j],
                        h.labels()[i],
                        h.labels()[j]
                    )));
                }
            }
        }
        Ok(delta)
    }

    /// The counit ε, which is always a character of a Hopf algebra.
    pub fn counit(h: &FiniteHopf) -> Result<Self> {
        Self::new(h, (0..h.dim()).map(|i| h.counit_of(i).clone()).collect())
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }
}

impl Functional<usize> for Character {
    fn value(&self, b: &usize) -> Scalar {
        self.values[*b].clone()
    }
}
