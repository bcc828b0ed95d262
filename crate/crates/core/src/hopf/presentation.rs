//! JSON presentation of a finite-dimensional Hopf algebra.
//!
//! ```json
//! { "name": "Q[Z/2]", "field": {"kind": "rational"}, "dim": 2,
//!   "basis": ["e", "g"], "unit": ["1", "0"],
//!   "product": [[0,0,0,"1"], [0,1,1,"1"], [1,0,1,"1"], [1,1,0,"1"]],
//!   "coproduct": [[0,0,0,"1"], [1,1,1,"1"]],
//!   "counit": ["1", "1"], "antipode": [[0,0,"1"], [1,1,"1"]],
//!   "characters": {} }
//! ```
//!
//! Indices are 0-based, omitted entries are zero and repeated entries add.
//! Scalars are strings in the field's syntax (`"-3/2"`, `"1 + 2*z"`);
//! plain JSON integers are accepted as well.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar};
use crate::tensor::{Element, TensorElement};

use super::finite::{FiniteHopf, HopfParts};

/// A scalar as written in a presentation file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    pub fn parse(&self, field: &FieldSpec) -> Result<Scalar> {
        match self {
            // rationals embed in every supported field
            ScalarText::Int(n) => Ok(Scalar::from_int(*n)),
            ScalarText::Text(s) => field.parse(s),
        }
    }
}

impl From<&Scalar> for ScalarText {
    fn from(s: &Scalar) -> Self {
        ScalarText::Text(s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFile {
    pub name: String,
    #[serde(default)]
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<ScalarText>,
    pub product: Vec<(usize, usize, usize, ScalarText)>,
    pub coproduct: Vec<(usize, usize, usize, ScalarText)>,
    pub counit: Vec<ScalarText>,
    pub antipode: Vec<(usize, usize, ScalarText)>,
    #[serde(default)]
    pub characters: BTreeMap<String, Vec<ScalarText>>,
}

pub(crate) fn check_index(i: usize, dim: usize, what: &str) -> Result<()> {
    if i >= dim {
        return Err(Error::IndexOutOfRange(format!("{what}: index {i} >= dim {dim}")));
    }
    Ok(())
}

pub(crate) fn parse_vector(v: &[ScalarText], dim: usize, field: &FieldSpec, what: &str) -> Result<Vec<Scalar>> {
    if v.len() != dim {
        return Err(Error::DimensionMismatch(format!("{what}: {} values, expected {dim}", v.len())));
    }
    v.iter().map(|s| s.parse(field)).collect()
}

impl HopfFile {
    pub fn into_hopf(self) -> Result<FiniteHopf> {
        let dim = self.dim;
        if self.basis.len() != dim {
            return Err(Error::DimensionMismatch(format!("{} basis labels for dim {dim}", self.basis.len())));
        }
        let f = &self.field;
        let unit = Element::from_dense(&parse_vector(&self.unit, dim, f, "unit")?);
        let mut product = vec![Element::zero(); dim * dim];
        for (i, j, k, c) in &self.product {
            for x in [i, j, k] {
                check_index(*x, dim, "product")?;
            }
            product[i * dim + j].add_term(*k, c.parse(f)?);
        }
        let mut coproduct = vec![TensorElement::zero(2); dim];
        for (i, j, k, c) in &self.coproduct {
            for x in [i, j, k] {
                check_index(*x, dim, "coproduct")?;
            }
            coproduct[*i].add_term(vec![*j, *k], c.parse(f)?);
        }
        let counit = parse_vector(&self.counit, dim, f, "counit")?;
        let mut antipode = vec![Element::zero(); dim];
        for (i, j, c) in &self.antipode {
            check_index(*i, dim, "antipode")?;
            check_index(*j, dim, "antipode")?;
            antipode[*i].add_term(*j, c.parse(f)?);
        }
        let characters = self
            .characters
            .iter()
            .map(|(name, v)| Ok((name.clone(), parse_vector(v, dim, f, name)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        FiniteHopf::from_parts(HopfParts {
            name: self.name,
            field: self.field,
            labels: self.basis,
            unit,
            product,
            coproduct,
            counit,
            antipode,
            characters,
        })
    }

    pub fn from_hopf(h: &FiniteHopf) -> Self {
        let dim = h.dim();
        let mut product = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in h.product_of(i, j).iter() {
                    product.push((i, j, *k, c.into()));
                }
            }
        }
        let mut coproduct = Vec::new();
        let mut antipode = Vec::new();
        for i in 0..dim {
            for (t, c) in h.coproduct_of(i).iter() {
                coproduct.push((i, t[0], t[1], c.into()));
            }
            for (j, c) in h.antipode_of(i).iter() {
                antipode.push((i, *j, c.into()));
            }
        }
        let parts = h.clone().into_parts();
        HopfFile {
            name: parts.name,
            field: parts.field,
            dim,
            basis: parts.labels,
            unit: parts.unit.to_dense(dim).iter().map(Into::into).collect(),
            product,
            coproduct,
            counit: parts.counit.iter().map(Into::into).collect(),
            antipode,
            characters: parts
                .characters
                .iter()
                .map(|(k, v)| (k.clone(), v.iter().map(Into::into).collect()))
                .collect(),
        }
    }
}

pub fn parse_hopf(text: &str) -> Result<FiniteHopf> {
    let file: HopfFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_hopf()
}

pub fn load_hopf(path: &Path) -> Result<FiniteHopf> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_hopf(&text)
}

pub fn to_json(h: &FiniteHopf) -> String {
    serde_json::to_string_pretty(&HopfFile::from_hopf(h)).expect("presentation serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builders;

    #[test]
    fn roundtrip_builders() {
        for h in [builders::sweedler_h4(), builders::cyclic_group(3).unwrap(), builders::taft(3).unwrap()] {
            let back = parse_hopf(&to_json(&h)).unwrap();
            assert_eq!(to_json(&back), to_json(&h));
            assert_eq!(back.character_names().count(), h.character_names().count());
        }
    }

    #[test]
    fn repeated_entries_add_and_ints_parse() {
        let text = r#"{"name":"k","dim":1,"basis":["1"],"unit":[1],
            "product":[[0,0,0,"1/2"],[0,0,0,"1/2"]],"coproduct":[[0,0,0,1]],
            "counit":["1"],"antipode":[[0,0,1]]}"#;
        let h = parse_hopf(text).unwrap();
        assert_eq!(h.product_of(0, 0), &Element::basis(0));
    }

    #[test]
    fn malformed_input_is_a_parse_error() {
        assert!(matches!(parse_hopf("{"), Err(Error::Parse(_))));
        let bad_index = r#"{"name":"k","dim":1,"basis":["1"],"unit":[1],
            "product":[[0,0,3,"1"]],"coproduct":[],"counit":["1"],"antipode":[]}"#;
        assert!(matches!(parse_hopf(bad_index), Err(Error::IndexOutOfRange(_))));
    }
}
