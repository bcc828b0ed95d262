//! Built-in Hopf algebras.

use std::collections::BTreeMap;

use num::{BigRational, One};

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar};
use crate::tensor::{Element, TensorElement};

use super::finite::{FiniteHopf, HopfParts};
use super::{multiply, tensor_product_slotwise};

/// The ground field `k` as a one-dimensional Hopf algebra.
pub fn trivial() -> FiniteHopf {
    FiniteHopf::from_parts(HopfParts {
        name: "trivial".into(),
        field: FieldSpec::Rational,
        labels: vec!["1".into()],
        unit: Element::basis(0),
        product: vec![Element::basis(0)],
        coproduct: vec![TensorElement::basis(vec![0, 0])],
        counit: vec![Scalar::one()],
        antipode: vec![Element::basis(0)],
        characters: BTreeMap::new(),
    })
    .expect("trivial Hopf algebra is well formed")
}

/// A validated finite group: multiplication table, identity and inverses.
struct Group {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl Group {
    fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidAlgebra("Cayley table must be square with entries < n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidAlgebra("Cayley table has no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::InvalidAlgebra(format!("element {g} has no inverse")))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidAlgebra(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(Group { table, identity, inverse })
    }
}

/// The group algebra `k[G]`: group-like basis, `S(g) = g⁻¹`.
pub fn group_algebra(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteHopf> {
    let g = Group::new(table)?;
    let n = g.table.len();
    if labels.len() != n {
        return Err(Error::DimensionMismatch(format!("{} labels for a group of order {n}", labels.len())));
    }
    let product = (0..n * n).map(|k| Element::basis(g.table[k / n][k % n])).collect();
    FiniteHopf::from_parts(HopfParts {
        name: name.into(),
        field: FieldSpec::Rational,
        labels,
        unit: Element::basis(g.identity),
        product,
        coproduct: (0..n).map(|i| TensorElement::basis(vec![i, i])).collect(),
        counit: vec![Scalar::one(); n],
        antipode: g.inverse.iter().map(|&i| Element::basis(i)).collect(),
        characters: BTreeMap::new(),
    })
}

fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

fn power_labels(n: usize, g: &str) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => g.to_string(),
            _ => format!("{g}^{i}"),
        })
        .collect()
}

/// `ℚ[ℤ/n]` with basis `e, g, g^2, …`.
pub fn cyclic_group(n: usize) -> Result<FiniteHopf> {
    if n == 0 {
        return Err(Error::InvalidAlgebra("cyclic group of order 0".into()));
    }
    group_algebra(&format!("Q[Z/{n}]"), power_labels(n, "g"), cyclic_table(n))
}

/// The function algebra `k^G` on the dual basis `δ_g`: pointwise product,
/// `Δ(δ_g) = Σ_{ab=g} δ_a ⊗ δ_b`, `S(δ_g) = δ_{g⁻¹}`.
pub fn function_algebra(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteHopf> {
    let g = Group::new(table)?;
    let n = g.table.len();
    if labels.len() != n {
        return Err(Error::DimensionMismatch(format!("{} labels for a group of order {n}", labels.len())));
    }
    let product = (0..n * n)
        .map(|k| if k / n == k % n { Element::basis(k / n) } else { Element::zero() })
        .collect();
    let mut coproduct = vec![TensorElement::zero(2); n];
    for a in 0..n {
        for b in 0..n {
            coproduct[g.table[a][b]].add_term(vec![a, b], Scalar::one());
        }
    }
    FiniteHopf::from_parts(HopfParts {
        name: name.into(),
        field: FieldSpec::Rational,
        labels: labels.iter().map(|l| format!("δ_{l}")).collect(),
        unit: (0..n).map(|i| (i, Scalar::one())).collect(),
        product,
        coproduct,
        counit: (0..n).map(|i| if i == g.identity { Scalar::one() } else { Scalar::zero() }).collect(),
        antipode: g.inverse.iter().map(|&i| Element::basis(i)).collect(),
        characters: BTreeMap::new(),
    })
}

/// Sweedler's four-dimensional algebra on `1, g, x, gx` with
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δx = x⊗1 + g⊗x`, `S(x) = −gx`.
/// Carries the character `delta` with `δ(g) = −1`, `δ(x) = 0`.
pub fn sweedler_h4() -> FiniteHopf {
    let taft = taft_over(2, FieldSpec::Rational, Scalar::from_int(-1)).expect("H4 is well formed");
    let mut parts = taft.into_parts();
    parts.name = "H4".into();
    parts.labels = vec!["1".into(), "g".into(), "x".into(), "gx".into()];
    FiniteHopf::from_parts(parts).expect("H4 is well formed")
}

/// The Taft algebra of order `m` over `ℚ(ζₘ)`: `g^m = 1`, `x^m = 0`,
/// `xg = ζ gx`, `g` group-like, `Δx = x⊗1 + g⊗x`. Basis `gⁱxʲ` has index
/// `i + m·j`. The character `delta` has `δ(g) = ζ⁻¹`, which makes
/// `S̃² = I`.
pub fn taft(m: usize) -> Result<FiniteHopf> {
    if m < 2 {
        return Err(Error::InvalidAlgebra("Taft algebra needs m >= 2".into()));
    }
    let field = FieldSpec::Cyclotomic { order: m as u32 };
    let zeta = field.zeta()?;
    taft_over(m, field, zeta)
}

/// Taft structure constants with `zeta` a primitive m-th root of unity in `field`.
fn taft_over(m: usize, field: FieldSpec, zeta: Scalar) -> Result<FiniteHopf> {
    let dim = m * m;
    let idx = |i: usize, j: usize| i % m + m * j;
    let one = field.embed(BigRational::one())?;
    let zeta_pow = |k: usize| zeta.pow((k % m) as u32);
    let mut product = Vec::with_capacity(dim * dim);
    for p in 0..dim {
        for q in 0..dim {
            let (a, b) = (p % m, p / m);
            let (c, d) = (q % m, q / m);
            // gᵃxᵇ·gᶜxᵈ = ζ^{bc} g^{a+c} x^{b+d}
            product.push(if b + d < m {
                Element::term(idx(a + c, b + d), &one * &zeta_pow(b * c))
            } else {
                Element::zero()
            });
        }
    }
    let labels: Vec<String> = (0..dim)
        .map(|p| {
            let (i, j) = (p % m, p / m);
            let g = match i {
                0 => String::new(),
                1 => "g".into(),
                _ => format!("g^{i}"),
            };
            let x = match j {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{j}"),
            };
            if g.is_empty() && x.is_empty() {
                "1".into()
            } else {
                g + &x
            }
        })
        .collect();
    let unit = Element::term(0, one.clone());
    let mut parts = HopfParts {
        name: format!("Taft({m})"),
        field: field.clone(),
        labels,
        unit,
        product,
        coproduct: vec![TensorElement::zero(2); dim],
        counit: (0..dim).map(|p| if p / m == 0 { one.clone() } else { Scalar::zero() }).collect(),
        antipode: vec![Element::zero(); dim],
        characters: BTreeMap::new(),
    };
    // Δ and S on gⁱxʲ from the generator images, using the product above
    let h = FiniteHopf::from_parts(parts.clone())?;
    let g = idx(1, 0);
    let x = idx(0, 1);
    let g_inv = idx(m - 1, 0);
    let delta_g = TensorElement::basis(vec![g, g]);
    let mut delta_x = TensorElement::basis(vec![x, 0]);
    delta_x.add_term(vec![g, x], one.clone());
    let s_g = Element::basis(g_inv);
    let s_x = Element::term(idx(m - 1, 1), -&one);
    for i in 0..m {
        for j in 0..m {
            let mut d = TensorElement::basis(vec![0, 0]);
            let mut s = Element::basis(0);
            for _ in 0..i {
                d = tensor_product_slotwise(&h, &d, &delta_g);
            }
            for _ in 0..j {
                d = tensor_product_slotwise(&h, &d, &delta_x);
            }
            // S(gⁱxʲ) = S(x)ʲ S(g)ⁱ
            for _ in 0..j {
                s = multiply(&h, &s, &s_x);
            }
            for _ in 0..i {
                s = multiply(&h, &s, &s_g);
            }
            parts.coproduct[idx(i, j)] = d;
            parts.antipode[idx(i, j)] = s;
        }
    }
    let mut delta = vec![Scalar::zero(); dim];
    let zeta_inv = zeta.inv();
    for (i, slot) in delta.iter_mut().enumerate().take(m) {
        *slot = &one * &zeta_inv.pow(i as u32);
    }
    parts.characters.insert("delta".into(), delta);
    FiniteHopf::from_parts(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{check_hopf_axioms, coproduct, twisted_antipode, Character};
    use crate::tensor::Combination;

    #[test]
    fn h4_products_and_coproducts() {
        let h = sweedler_h4();
        assert_eq!(h.product_of(2, 2), &Element::zero());
        assert_eq!(h.product_of(2, 1), &Element::term(3, Scalar::from_int(-1)));
        let mut dx = TensorElement::basis(vec![2, 0]);
        dx.add_term(vec![1, 2], Scalar::one());
        assert_eq!(coproduct(&h, &Element::basis(2)), dx);
        assert_eq!(h.antipode_of(2), &Element::term(3, Scalar::from_int(-1)));
        assert_eq!(h.antipode_of(3), &Element::basis(2));
    }

    #[test]
    fn builders_satisfy_axioms() {
        let z6 = cyclic_table(6);
        let mut all = vec![trivial(), cyclic_group(2).unwrap(), cyclic_group(3).unwrap(), sweedler_h4()];
        all.push(function_algebra("Q^Z6", power_labels(6, "g"), z6).unwrap());
        all.push(taft(3).unwrap());
        for h in &all {
            let r = check_hopf_axioms(h, &h.basis());
            assert!(r.all_passed(), "{}:\n{}", h.name(), r.render());
        }
    }

    #[test]
    fn taft_delta_is_a_modular_pair() {
        for m in [2, 3, 4] {
            let h = taft(m).unwrap();
            let delta = h.character("delta").unwrap();
            for b in h.basis() {
                let e = Combination::basis(b);
                assert_eq!(twisted_antipode(&h, &delta, &twisted_antipode(&h, &delta, &e)), e);
            }
        }
    }

    #[test]
    fn non_group_table_is_rejected() {
        assert!(group_algebra("bad", vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 0]]).is_err());
        let h = cyclic_group(2).unwrap();
        assert!(Character::new(&h, vec![Scalar::one(), Scalar::from_int(2)]).is_err());
    }
}
