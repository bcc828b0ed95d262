//! Finite-dimensional Lie algebras by structure constants.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::presentation::ScalarText;
use crate::linalg::{FieldSpec, Scalar};
use crate::tensor::Element;

/// `[Xᵢ, Xⱼ] = Σₖ c^k_{ij} Xₖ`, antisymmetric and satisfying Jacobi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    field: FieldSpec,
    labels: Vec<String>,
    /// `brackets[i * n + j] = [Xᵢ, Xⱼ]`
    brackets: Vec<Element>,
}

impl LieAlgebra {
    /// Builds from `(i, j, k, c)` entries meaning `[Xᵢ,Xⱼ]` gains `c·Xₖ`.
    ///
    /// Listing only one of `[Xᵢ,Xⱼ]`, `[Xⱼ,Xᵢ]` is enough; the other is
    /// filled in. Listing both requires them to be negatives.
    pub fn new(
        name: &str,
        field: FieldSpec,
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut given = vec![Element::zero(); n * n];
        let mut listed = vec![false; n * n];
        for (i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::IndexOutOfRange(format!("bracket ({i},{j},{k}) in dimension {n}")));
            }
            if !c.belongs_to(&field) {
                return Err(Error::FieldMismatch(c.field().to_string(), field.to_string()));
            }
            given[i * n + j].add_term(k, c);
            listed[i * n + j] = true;
        }
        let mut brackets = vec![Element::zero(); n * n];
        for i in 0..n {
            if !given[i * n + i].is_zero() {
                return Err(Error::InvalidLieAlgebra(format!("[{0},{0}] must vanish", labels[i])));
            }
            for j in i + 1..n {
                let (a, b) = (&given[i * n + j], &given[j * n + i]);
                let ij = match (listed[i * n + j], listed[j * n + i]) {
                    (_, false) => a.clone(),
                    (false, true) => b.scaled(&Scalar::from_int(-1)),
                    (true, true) => {
                        if !a.plus(b).is_zero() {
                            return Err(Error::InvalidLieAlgebra(format!(
                                "bracket of {} and {} is not antisymmetric",
                                labels[i], labels[j]
                            )));
                        }
                        a.clone()
                    }
                };
                brackets[j * n + i] = ij.scaled(&Scalar::from_int(-1));
                brackets[i * n + j] = ij;
            }
        }
        let lie = LieAlgebra { name: name.into(), field, labels, brackets };
        lie.check_jacobi()?;
        Ok(lie)
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut sum = Element::zero();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = self.bracket(a, b);
                        sum = sum.plus(&inner.map_linear(|&l| self.bracket(l, c).clone()));
                    }
                    if !sum.is_zero() {
                        return Err(Error::InvalidLieAlgebra(format!(
                            "Jacobi identity fails for ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
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

    pub fn bracket(&self, i: usize, j: usize) -> &Element {
        &self.brackets[i * self.dim() + j]
    }

    /// `tr(ad Xᵢ) = Σⱼ c^j_{ij}`.
    pub fn ad_trace(&self, i: usize) -> Scalar {
        let mut t = Scalar::zero();
        for j in 0..self.dim() {
            t += &self.bracket(i, j).coeff(&j);
        }
        t
    }

    pub fn abelian(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("X{i}")).collect();
        LieAlgebra::new(&format!("abelian({n})"), FieldSpec::Rational, labels, []).expect("abelian")
    }

    /// The non-abelian two-dimensional algebra `[X, Y] = Y`.
    pub fn ax_plus_b() -> Self {
        LieAlgebra::new(
            "ax+b",
            FieldSpec::Rational,
            vec!["X".into(), "Y".into()],
            [(0, 1, 1, Scalar::one())],
        )
        .expect("ax+b")
    }

    /// `[X, Y] = Z`, `Z` central.
    pub fn heisenberg() -> Self {
        LieAlgebra::new(
            "heisenberg",
            FieldSpec::Rational,
            vec!["X".into(), "Y".into(), "Z".into()],
            [(0, 1, 2, Scalar::one())],
        )
        .expect("heisenberg")
    }

    /// `[H,E] = 2E`, `[H,F] = −2F`, `[E,F] = H`.
    pub fn sl2() -> Self {
        LieAlgebra::new(
            "sl2",
            FieldSpec::Rational,
            vec!["H".into(), "E".into(), "F".into()],
            [(0, 1, 1, Scalar::from_int(2)), (0, 2, 2, Scalar::from_int(-2)), (1, 2, 0, Scalar::one())],
        )
        .expect("sl2")
    }
}

/// Lie algebra input file: `{"name", "dim", "basis"?, "field"?, "brackets": [[i,j,k,"c"]]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieFile {
    pub name: String,
    #[serde(default)]
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default)]
    pub basis: Option<Vec<String>>,
    pub brackets: Vec<(usize, usize, usize, ScalarText)>,
}

impl LieFile {
    pub fn into_lie(self) -> Result<LieAlgebra> {
        let labels = match self.basis {
            Some(b) if b.len() != self.dim => {
                return Err(Error::DimensionMismatch(format!("{} labels for dim {}", b.len(), self.dim)))
            }
            Some(b) => b,
            None => (1..=self.dim).map(|i| format!("X{i}")).collect(),
        };
        let entries = self
            .brackets
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, c.parse(&self.field)?)))
            .collect::<Result<Vec<_>>>()?;
        LieAlgebra::new(&self.name, self.field, labels, entries)
    }
}

pub fn parse_lie(text: &str) -> Result<LieAlgebra> {
    let file: LieFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_lie()
}

pub fn load_lie(path: &Path) -> Result<LieAlgebra> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_lie(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisymmetric_partner_is_filled() {
        let l = LieAlgebra::ax_plus_b();
        assert_eq!(l.bracket(1, 0), &Element::term(1, Scalar::from_int(-1)));
        assert_eq!(l.ad_trace(0), Scalar::one());
        assert_eq!(l.ad_trace(1), Scalar::zero());
    }

    #[test]
    fn jacobi_violation_is_rejected() {
        // [X,Y]=Y, [Y,Z]=Y, [X,Z]=X breaks Jacobi
        let bad = LieAlgebra::new(
            "bad",
            FieldSpec::Rational,
            vec!["X".into(), "Y".into(), "Z".into()],
            [(0, 1, 1, Scalar::one()), (1, 2, 1, Scalar::one()), (0, 2, 0, Scalar::one())],
        );
        assert!(matches!(bad, Err(Error::InvalidLieAlgebra(_))));
    }

    #[test]
    fn inconsistent_partners_are_rejected() {
        let bad = LieAlgebra::new(
            "bad",
            FieldSpec::Rational,
            vec!["X".into(), "Y".into()],
            [(0, 1, 1, Scalar::one()), (1, 0, 1, Scalar::one())],
        );
        assert!(matches!(bad, Err(Error::InvalidLieAlgebra(_))));
    }

    #[test]
    fn parse_file() {
        let l = parse_lie(r#"{"name":"ax+b","dim":2,"basis":["X","Y"],"brackets":[[0,1,1,"1"]]}"#).unwrap();
        assert_eq!(l, LieAlgebra::ax_plus_b());
        assert!(LieAlgebra::sl2().ad_trace(0).is_zero());
    }
}
