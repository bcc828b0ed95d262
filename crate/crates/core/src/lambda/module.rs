//! The two cyclic modules: tensor powers of a Hopf algebra with a
//! character, and cochains on an algebra.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::actions::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::hopf::{
    iterated_coproduct, map_slot, tensor_product_slotwise, twisted_antipode, Character, FiniteHopf, Functional,
    HopfAlgebra,
};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::tensor::{format_tensor, index_tuple, Combination, Tensor, TensorElement};

use super::morphism::{Generator, Word};

// ---- element-level operators, for any Hopf algebra ----

/// `δᵢ: H^{⊗(n−1)} → H^{⊗n}`: prepend 1, apply `Δ` to slot `i`, or append 1.
pub fn hopf_face<H: HopfAlgebra>(h: &H, i: usize, t: &Tensor<H::Basis>) -> Tensor<H::Basis> {
    let n = t.degree() + 1;
    assert!(i <= n, "face index {i} out of range for degree {n}");
    let one = Tensor::from_factors(&[h.unit()]);
    if i == 0 {
        one.tensor(t)
    } else if i == n {
        t.tensor(&one)
    } else {
        map_slot(t, i - 1, 2, |b| h.coproduct_basis(b))
    }
}

/// `σᵢ: H^{⊗(n+1)} → H^{⊗n}`: apply `ε` to slot `i` (0-based).
pub fn hopf_degeneracy<H: HopfAlgebra>(h: &H, i: usize, t: &Tensor<H::Basis>) -> Tensor<H::Basis> {
    map_slot(t, i, 0, |b| Tensor::scalar(h.counit_basis(b)))
}

/// `τₙ(h¹⊗…⊗hⁿ) = Δ^{n−1}S̃(h¹) · (h²⊗…⊗hⁿ⊗1)`; identity in degree 0.
pub fn hopf_cyclic<H, D>(h: &H, delta: &D, t: &Tensor<H::Basis>) -> Tensor<H::Basis>
where
    H: HopfAlgebra,
    D: Functional<H::Basis>,
{
    let n = t.degree();
    if n == 0 {
        return t.clone();
    }
    t.map_linear(n, |tuple| {
        let s = twisted_antipode(h, delta, &Combination::basis(tuple[0].clone()));
        let spread = iterated_coproduct(h, &s, n);
        let mut factors: Vec<_> = tuple[1..].iter().map(|b| Combination::basis(b.clone())).collect();
        factors.push(h.unit());
        tensor_product_slotwise(h, &spread, &Tensor::from_factors(&factors))
    })
}

pub fn hopf_generator<H, D>(h: &H, delta: &D, g: Generator, t: &Tensor<H::Basis>) -> Result<Tensor<H::Basis>>
where
    H: HopfAlgebra,
    D: Functional<H::Basis>,
{
    g.validate()?;
    if t.degree() != g.source() {
        return Err(Error::NotComposable(format!("{g} applied in degree {}", t.degree())));
    }
    Ok(match g {
        Generator::Face { i, .. } => hopf_face(h, i, t),
        Generator::Degeneracy { i, .. } => hopf_degeneracy(h, i, t),
        Generator::Cyclic { .. } => hopf_cyclic(h, delta, t),
    })
}

/// Applies a word right to left.
pub fn hopf_word<H, D>(h: &H, delta: &D, word: &Word, t: &Tensor<H::Basis>) -> Result<Tensor<H::Basis>>
where
    H: HopfAlgebra,
    D: Functional<H::Basis>,
{
    let mut out = t.clone();
    for g in word.generators().iter().rev() {
        out = hopf_generator(h, delta, *g, &out)?;
    }
    Ok(out)
}

/// `τₙʲ(h¹⊗…⊗hⁿ) = Δ^{n−1}S̃(hʲ) · (h^{j+1}⊗…⊗hⁿ⊗1⊗h¹⊗…⊗h^{j−1})` for
/// `1 ≤ j ≤ n + 1`, reading `h^{n+1} = 1`; `j = 0` is the identity.
pub fn cyclic_power_closed_form<H, D>(h: &H, delta: &D, j: usize, t: &Tensor<H::Basis>) -> Tensor<H::Basis>
where
    H: HopfAlgebra,
    D: Functional<H::Basis>,
{
    let n = t.degree();
    assert!(j <= n + 1, "power {j} beyond the period of τ in degree {n}");
    if j == 0 || n == 0 {
        return t.clone();
    }
    t.map_linear(n, |tuple| {
        // slot k (1-based, k = 1..=n+1) holds hᵏ, with slot n+1 the unit
        let slot = |k: usize| {
            if k == n + 1 {
                h.unit()
            } else {
                Combination::basis(tuple[k - 1].clone())
            }
        };
        let spread = iterated_coproduct(h, &twisted_antipode(h, delta, &slot(j)), n);
        let rest: Vec<_> = (1..=n).map(|r| slot((j - 1 + r) % (n + 1) + 1)).collect();
        tensor_product_slotwise(h, &spread, &Tensor::from_factors(&rest))
    })
}

// ---- matrix realizations ----

/// A cyclic module whose spaces are finite dimensional.
pub trait CyclicModule: Sync {
    fn name(&self) -> String;
    fn dim(&self, n: usize) -> usize;
    /// The operator of one generator, cached.
    fn generator_matrix(&self, g: Generator) -> Result<Arc<SparseMatrix>>;
    /// Renders a vector of the degree-`n` space.
    fn format_vector(&self, n: usize, v: &SparseVec) -> String;
}

/// The operator of a word, composed right to left.
pub fn interpret_word<M: CyclicModule + ?Sized>(m: &M, word: &Word) -> Result<SparseMatrix> {
    let mut acc = SparseMatrix::identity(m.dim(word.source()));
    for g in word.generators().iter().rev() {
        acc = m.generator_matrix(*g)?.mul(&acc)?;
    }
    Ok(acc)
}

type Cache = Mutex<HashMap<Generator, Arc<SparseMatrix>>>;

fn cached(cache: &Cache, g: Generator, build: impl FnOnce() -> Result<SparseMatrix>) -> Result<Arc<SparseMatrix>> {
    if let Some(hit) = cache.lock().expect("cache lock").get(&g) {
        return Ok(hit.clone());
    }
    let m = Arc::new(build()?);
    cache.lock().expect("cache lock").insert(g, m.clone());
    Ok(m)
}

/// `H_δ^♮`: the spaces `H^{⊗n}` (degree 0 is the field) with the twisted
/// cyclic structure. Basis tuples are ordered lexicographically.
pub struct HopfCyclicModule {
    h: FiniteHopf,
    delta: Character,
    cache: Cache,
}

impl HopfCyclicModule {
    pub fn new(h: &FiniteHopf, delta: &Character) -> Self {
        HopfCyclicModule { h: h.clone(), delta: delta.clone(), cache: Mutex::new(HashMap::new()) }
    }

    pub fn hopf(&self) -> &FiniteHopf {
        &self.h
    }

    pub fn character(&self) -> &Character {
        &self.delta
    }

    pub fn basis_tensor(&self, n: usize, index: usize) -> TensorElement {
        TensorElement::basis(index_tuple(index, self.h.dim(), n))
    }

    /// Matrix of an element-level operator from degree `src` to `dst`.
    pub fn assemble(&self, src: usize, dst: usize, f: impl Fn(&TensorElement) -> TensorElement + Sync) -> SparseMatrix {
        let d = self.h.dim();
        let cols: Vec<SparseVec> =
            (0..self.dim(src)).into_par_iter().map(|c| f(&self.basis_tensor(src, c)).to_sparse(d)).collect();
        SparseMatrix::from_columns(self.dim(dst), cols).expect("images lie in the target space")
    }
}

impl CyclicModule for HopfCyclicModule {
    fn name(&self) -> String {
        format!("{} (hopf)", self.h.name())
    }

    fn dim(&self, n: usize) -> usize {
        self.h.dim().pow(n as u32)
    }

    fn generator_matrix(&self, g: Generator) -> Result<Arc<SparseMatrix>> {
        g.validate()?;
        cached(&self.cache, g, || {
            Ok(self.assemble(g.source(), g.target(), |t| {
                hopf_generator(&self.h, &self.delta, g, t).expect("degree matches generator")
            }))
        })
    }

    fn format_vector(&self, n: usize, v: &SparseVec) -> String {
        let t = TensorElement::from_sparse(v, self.h.dim(), n);
        format_tensor(&t, |b| self.h.labels()[*b].clone())
    }
}

/// Cochains `Cⁿ(A) = (A^{⊗(n+1)})*` with the transposed structure maps,
/// on the dual of the lexicographic tuple basis.
pub struct AlgebraCochainModule {
    a: FiniteAlgebra,
    cache: Cache,
}

impl AlgebraCochainModule {
    pub fn new(a: &FiniteAlgebra) -> Self {
        AlgebraCochainModule { a: a.clone(), cache: Mutex::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.a
    }

    /// The arguments at which the source cochain is evaluated, as a tensor
    /// over source tuples, for the target argument tuple `x`.
    fn argument(&self, g: Generator, x: &[usize]) -> TensorElement {
        let e = |i: usize| Combination::basis(i);
        let factors: Vec<Combination<usize>> = match g {
            Generator::Face { i, n } if i < n => {
                let mut f: Vec<_> = x[..i].iter().map(|&k| e(k)).collect();
                f.push(self.a.product_of(x[i], x[i + 1]).clone());
                f.extend(x[i + 2..].iter().map(|&k| e(k)));
                f
            }
            Generator::Face { n, .. } => {
                let mut f = vec![self.a.product_of(x[n], x[0]).clone()];
                f.extend(x[1..n].iter().map(|&k| e(k)));
                f
            }
            Generator::Degeneracy { i, .. } => {
                let mut f: Vec<_> = x[..=i].iter().map(|&k| e(k)).collect();
                f.push(self.a.unit().clone());
                f.extend(x[i + 1..].iter().map(|&k| e(k)));
                f
            }
            Generator::Cyclic { n } => {
                let mut f = vec![e(x[n])];
                f.extend(x[..n].iter().map(|&k| e(k)));
                f
            }
        };
        Tensor::from_factors(&factors)
    }
}

impl CyclicModule for AlgebraCochainModule {
    fn name(&self) -> String {
        format!("{} (cochains)", self.a.name())
    }

    fn dim(&self, n: usize) -> usize {
        self.a.dim().pow(n as u32 + 1)
    }

    fn generator_matrix(&self, g: Generator) -> Result<Arc<SparseMatrix>> {
        g.validate()?;
        cached(&self.cache, g, || {
            let d = self.a.dim();
            let (src, dst) = (g.source(), g.target());
            let rows: Vec<SparseVec> = (0..self.dim(dst))
                .into_par_iter()
                .map(|r| self.argument(g, &index_tuple(r, d, dst + 1)).to_sparse(d))
                .collect();
            SparseMatrix::from_rows(self.dim(src), rows)
        })
    }

    fn format_vector(&self, n: usize, v: &SparseVec) -> String {
        let t = TensorElement::from_sparse(v, self.a.dim(), n + 1);
        format_tensor(&t, |b| format!("{}*", self.a.labels()[*b]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builders;
    use crate::linalg::Scalar;

    fn t(tuple: &[usize]) -> TensorElement {
        TensorElement::basis(tuple.to_vec())
    }

    #[test]
    fn faces_and_degeneracies_on_examples() {
        let z2 = builders::cyclic_group(2).unwrap();
        assert_eq!(hopf_face(&z2, 1, &t(&[1, 1])), t(&[1, 1, 1]));
        assert_eq!(hopf_face(&z2, 0, &TensorElement::scalar(Scalar::one())), t(&[0]));
        assert_eq!(hopf_degeneracy(&z2, 0, &t(&[1, 1])), t(&[1]));
        let h4 = builders::sweedler_h4();
        // on a degree-2 source the last face is δ₃; δ₂ splits the second slot
        assert_eq!(hopf_face(&h4, 3, &t(&[2, 1])), t(&[2, 1, 0]));
        assert_eq!(hopf_face(&h4, 2, &t(&[2, 1])), t(&[2, 1, 1]));
        assert!(hopf_degeneracy(&h4, 0, &t(&[2, 1])).is_zero());
    }

    #[test]
    fn cyclic_operator_examples() {
        let z2 = builders::cyclic_group(2).unwrap();
        let eps = Character::counit(&z2).unwrap();
        assert_eq!(hopf_cyclic(&z2, &eps, &t(&[1])), t(&[1]));
        assert_eq!(hopf_cyclic(&z2, &eps, &t(&[1, 1])), t(&[0, 1]));
    }

    #[test]
    fn tau_two_matches_sweedler_expansion() {
        // τ₂(h¹⊗h²) = Σ S(h¹₍₂₎)h² ⊗ S̃(h¹₍₁₎)
        let h = builders::sweedler_h4();
        let delta = h.character("delta").unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let mut want = TensorElement::zero(2);
                for (pair, c) in h.coproduct_of(a).iter() {
                    let left = crate::hopf::multiply(&h, h.antipode_of(pair[1]), &Combination::basis(b));
                    let right = twisted_antipode(&h, &delta, &Combination::basis(pair[0]));
                    want.add_scaled(c, &Tensor::from_factors(&[left, right]));
                }
                assert_eq!(hopf_cyclic(&h, &delta, &t(&[a, b])), want);
            }
        }
    }

    #[test]
    fn algebra_operators_on_scalars_are_trivial() {
        let m = AlgebraCochainModule::new(&FiniteAlgebra::scalars());
        for n in 0..4 {
            assert_eq!(*m.generator_matrix(Generator::Cyclic { n }).unwrap(), SparseMatrix::identity(1));
        }
        let m2 = AlgebraCochainModule::new(&FiniteAlgebra::matrix_algebra(2));
        let t1 = m2.generator_matrix(Generator::Cyclic { n: 1 }).unwrap();
        assert_eq!(t1.mul(&t1).unwrap(), SparseMatrix::identity(16));
    }
}
