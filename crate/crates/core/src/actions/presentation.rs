//! JSON presentation of an algebra together with an action, a trace and an
//! idempotent.
//!
//! ```json
//! { "algebra": { "name": "Q^(Z/2)", "dim": 2, "basis": ["p0", "p1"],
//!                "unit": [1, 1], "product": [[0,0,0,1], [1,1,1,1]] },
//!   "action": [[0,0,0,1], [0,1,1,1], [1,0,1,1], [1,1,0,1]],
//!   "trace": [1, 1],
//!   "idempotent": { "size": 2, "entries": [[0,0,0,1], [0,0,1,1]] },
//!   "pairing_degree": 0 }
//! ```
//!
//! An action entry `[h, a, b, c]` puts `c` on `e_b` in `e_h · e_a`; an
//! idempotent entry `[i, j, k, c]` puts `c·e_k` in position `(i, j)`.
//! All sections except `algebra` are optional.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::presentation::{check_index, parse_vector, ScalarText};
use crate::hopf::FiniteHopf;
use crate::linalg::{FieldSpec, SparseMatrix};
use crate::tensor::Element;

use super::action::{HopfAction, Trace};
use super::algebra::FiniteAlgebra;
use super::pairing::AlgebraMatrix;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    #[serde(default)]
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<ScalarText>,
    pub product: Vec<(usize, usize, usize, ScalarText)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdempotentFile {
    pub size: usize,
    pub entries: Vec<(usize, usize, usize, ScalarText)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub algebra: AlgebraFile,
    #[serde(default)]
    pub action: Option<Vec<(usize, usize, usize, ScalarText)>>,
    #[serde(default)]
    pub trace: Option<Vec<ScalarText>>,
    #[serde(default)]
    pub idempotent: Option<IdempotentFile>,
    #[serde(default)]
    pub pairing_degree: usize,
}

/// A parsed [`ActionFile`]; the action stays raw until `H` is known.
#[derive(Clone, Debug)]
pub struct ActionData {
    pub algebra: FiniteAlgebra,
    pub trace: Option<Trace>,
    pub idempotent: Option<AlgebraMatrix>,
    pub pairing_degree: usize,
    action: Option<Vec<(usize, usize, usize, ScalarText)>>,
}

impl AlgebraFile {
    pub fn into_algebra(self) -> Result<FiniteAlgebra> {
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
        FiniteAlgebra::new(&self.name, self.field, self.basis, unit, product)
    }
}

impl ActionData {
    pub fn from_file(file: ActionFile) -> Result<Self> {
        let algebra = file.algebra.into_algebra()?;
        let (d, f) = (algebra.dim(), algebra.field().clone());
        let trace = match &file.trace {
            Some(v) => Some(Trace::new(&algebra, parse_vector(v, d, &f, "trace")?)?),
            None => None,
        };
        let idempotent = match &file.idempotent {
            Some(e) => {
                let mut entries = vec![Element::zero(); e.size * e.size];
                for (i, j, k, c) in &e.entries {
                    check_index(*i, e.size, "idempotent row")?;
                    check_index(*j, e.size, "idempotent column")?;
                    check_index(*k, d, "idempotent entry")?;
                    entries[i * e.size + j].add_term(*k, c.parse(&f)?);
                }
                Some(AlgebraMatrix::new(e.size, entries)?)
            }
            None => None,
        };
        Ok(ActionData { algebra, trace, idempotent, pairing_degree: file.pairing_degree, action: file.action })
    }

    /// The action of `h`; `None` when the file has no action section.
    pub fn action(&self, h: &FiniteHopf) -> Result<Option<HopfAction>> {
        let Some(entries) = &self.action else { return Ok(None) };
        let (dh, da) = (h.dim(), self.algebra.dim());
        let mut triplets = vec![Vec::new(); dh];
        for (i, a, b, c) in entries {
            check_index(*i, dh, "action element")?;
            check_index(*a, da, "action argument")?;
            check_index(*b, da, "action image")?;
            triplets[*i].push((*b, *a, c.parse(self.algebra.field())?));
        }
        let matrices =
            triplets.into_iter().map(|t| SparseMatrix::from_triplets(da, da, t)).collect::<Result<Vec<_>>>()?;
        HopfAction::new(h, &self.algebra, matrices).map(Some)
    }
}

pub fn parse_action_file(text: &str) -> Result<ActionData> {
    let file: ActionFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    ActionData::from_file(file)
}

pub fn load_action_file(path: &Path) -> Result<ActionData> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_action_file(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::check_action;
    use crate::hopf::builders;

    const TRANSLATION: &str = r#"{
        "algebra": {"name": "Q^(Z/2)", "dim": 2, "basis": ["p0", "p1"], "unit": [1, 1],
                    "product": [[0,0,0,1], [1,1,1,1]]},
        "action": [[0,0,0,1], [0,1,1,1], [1,0,1,1], [1,1,0,1]],
        "trace": [1, 1],
        "idempotent": {"size": 2, "entries": [[0,0,0,1], [0,0,1,1]]}
    }"#;

    #[test]
    fn translation_file_matches_builder() {
        let data = parse_action_file(TRANSLATION).unwrap();
        let h = builders::cyclic_group(2).unwrap();
        let act = data.action(&h).unwrap().unwrap();
        assert_eq!(act, HopfAction::translation(2));
        assert!(check_action(&h, &data.algebra, &act).all_passed());
        assert_eq!(data.trace, Some(Trace::summation(2)));
        assert!(data.idempotent.unwrap().is_idempotent(&data.algebra));
    }

    #[test]
    fn bad_files() {
        assert!(matches!(parse_action_file("[]"), Err(Error::Parse(_))));
        let not_trace = TRANSLATION.replace(r#""trace": [1, 1]"#, r#""trace": [1]"#);
        assert!(parse_action_file(&not_trace).is_err());
    }
}
