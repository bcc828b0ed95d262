//! Hopf actions on algebras, δ-invariant traces and the characteristic map.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hopf::{twisted_antipode, Character, FiniteHopf};
use crate::lambda::{AlgebraCochainModule, CyclicModule, Generator, HopfCyclicModule};
use crate::linalg::{Scalar, SparseMatrix};
use crate::report::CheckReport;
use crate::tensor::{index_tuple, Combination, Element, TensorElement};

use super::algebra::FiniteAlgebra;
use super::cochain::Cochain;

/// `H` acting on `A`: one matrix per basis element of `H`, columns are the
/// images of the basis of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAction {
    matrices: Vec<SparseMatrix>,
}

impl HopfAction {
    /// Shape checks only; the axioms are left to [`check_action`].
    pub fn new(h: &FiniteHopf, a: &FiniteAlgebra, matrices: Vec<SparseMatrix>) -> Result<Self> {
        if matrices.len() != h.dim() {
            return Err(Error::DimensionMismatch(format!("{} matrices for dim H = {}", matrices.len(), h.dim())));
        }
        if let Some(m) = matrices.iter().find(|m| m.nrows() != a.dim() || m.ncols() != a.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} action matrix on an algebra of dimension {}",
                m.nrows(),
                m.ncols(),
                a.dim()
            )));
        }
        Ok(HopfAction { matrices })
    }

    /// `h·a = ε(h)a`.
    pub fn trivial(h: &FiniteHopf, a: &FiniteAlgebra) -> Self {
        let matrices = (0..h.dim()).map(|i| SparseMatrix::scalar(a.dim(), h.counit_of(i))).collect();
        HopfAction { matrices }
    }

    /// `ℚ[ℤ/n]` acting on `ℚ^{ℤ/n}` by translation, `(gᵏf)(s) = f(s + k)`,
    /// so `gᵏ·pₛ = p_{s−k}`. Bases as in `cyclic_group(n)` and
    /// `FiniteAlgebra::functions_on_cyclic(n)`.
    pub fn translation(n: usize) -> Self {
        let matrices = (0..n)
            .map(|k| {
                SparseMatrix::from_triplets(n, n, (0..n).map(|s| ((s + n - k) % n, s, Scalar::one())))
                    .expect("permutation matrix")
            })
            .collect();
        HopfAction { matrices }
    }

    /// Replaces the matrix of one basis element; for negative controls.
    pub fn with_matrix(mut self, i: usize, m: SparseMatrix) -> Self {
        self.matrices[i] = m;
        self
    }

    pub fn matrix(&self, i: usize) -> &SparseMatrix {
        &self.matrices[i]
    }

    /// `eᵢ·x`
    pub fn act_basis(&self, i: usize, x: &Element) -> Element {
        let v = self.matrices[i].apply(&x.to_sparse()).expect("shapes checked at construction");
        Combination::from_terms(v)
    }

    /// `h·x` for an arbitrary element `h` of `H`.
    pub fn act(&self, h: &Element, x: &Element) -> Element {
        let mut out = Element::zero();
        for (i, c) in h.iter() {
            out.add_scaled(c, &self.act_basis(*i, x));
        }
        out
    }
}

/// A linear functional on `A` with `τ(ab) = τ(ba)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    values: Vec<Scalar>,
}

impl Trace {
    pub fn new(a: &FiniteAlgebra, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != a.dim() {
            return Err(Error::DimensionMismatch(format!("{} trace values for dim A = {}", values.len(), a.dim())));
        }
        let t = Trace { values };
        for i in 0..a.dim() {
            for j in 0..i {
                let (ab, ba) = (t.eval(a.product_of(i, j)), t.eval(a.product_of(j, i)));
                if ab != ba {
                    return Err(Error::Precondition(format!(
                        "not a trace: τ({}·{}) = {ab}, τ({}·{}) = {ba}",
                        a.labels()[i],
                        a.labels()[j],
                        a.labels()[j],
                        a.labels()[i]
                    )));
                }
            }
        }
        Ok(t)
    }

    /// The matrix trace on `M_k(ℚ)` in the basis of [`FiniteAlgebra::matrix_algebra`].
    pub fn matrix_trace(k: usize) -> Self {
        Trace { values: (0..k * k).map(|p| if p / k == p % k { Scalar::one() } else { Scalar::zero() }).collect() }
    }

    /// Summation over points on `ℚ^{ℤ/n}`.
    pub fn summation(n: usize) -> Self {
        Trace { values: vec![Scalar::one(); n] }
    }

    /// Evaluation at the point `s` of `ℤ/n`.
    pub fn point_evaluation(n: usize, s: usize) -> Self {
        Trace { values: (0..n).map(|t| if t == s { Scalar::one() } else { Scalar::zero() }).collect() }
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn eval(&self, x: &Element) -> Scalar {
        let mut out = Scalar::zero();
        for (i, c) in x.iter() {
            out += &(c * &self.values[*i]);
        }
        out
    }
}

/// Module axiom, unit action, `h(ab) = Σ h₍₁₎(a)h₍₂₎(b)` and `h(1) = ε(h)1`,
/// exactly on basis elements.
pub fn check_action(h: &FiniteHopf, a: &FiniteAlgebra, act: &HopfAction) -> CheckReport {
    let mut report = CheckReport::new(format!("action of {} on {}", h.name(), a.name()));
    let (dh, da) = (h.dim(), a.dim());
    let hl = |i: usize| h.labels()[i].clone();

    let unit_witness = (0..da).find_map(|k| {
        let x = Element::basis(k);
        let image = act.act(h.unit_element(), &x);
        (image != x).then(|| format!("1·{} = {}", a.labels()[k], a.show(&image)))
    });
    report.record("unit-acts-identity", None, unit_witness);

    let module_witness = (0..dh * dh * da).find_map(|p| {
        let (i, j, k) = (p / (dh * da), (p / da) % dh, p % da);
        let x = Element::basis(k);
        let lhs = act.act_basis(i, &act.act_basis(j, &x));
        let rhs = act.act(h.product_of(i, j), &x);
        (lhs != rhs).then(|| {
            format!("h1={}, h2={}, a={}: {} vs {}", hl(i), hl(j), a.labels()[k], a.show(&lhs), a.show(&rhs))
        })
    });
    report.record("module-axiom", None, module_witness);

    let linearity_witness = (0..dh * da * da).into_par_iter().find_first(|&p| {
        let (i, j, k) = (p / (da * da), (p / da) % da, p % da);
        let (x, y) = (Element::basis(j), Element::basis(k));
        let lhs = act.act_basis(i, &a.multiply(&x, &y));
        lhs != split_action(h, a, act, i, &x, &y)
    });
    report.record(
        "hopf-linearity",
        None,
        linearity_witness.map(|p| {
            let (i, j, k) = (p / (da * da), (p / da) % da, p % da);
            format!("h={}, a={}, b={}", hl(i), a.labels()[j], a.labels()[k])
        }),
    );

    let unit_preserved = (0..dh).find_map(|i| {
        let image = act.act_basis(i, a.unit());
        let expected = a.unit().scaled(h.counit_of(i));
        (image != expected).then(|| format!("{}·1 = {}, ε({}) = {}", hl(i), a.show(&image), hl(i), h.counit_of(i)))
    });
    report.record("unit-preserved", None, unit_preserved);
    report
}

/// `Σ h₍₁₎(x) h₍₂₎(y)` for `h = eᵢ`.
fn split_action(h: &FiniteHopf, a: &FiniteAlgebra, act: &HopfAction, i: usize, x: &Element, y: &Element) -> Element {
    let mut out = Element::zero();
    for (pair, c) in h.coproduct_of(i).iter() {
        out.add_scaled(c, &a.multiply(&act.act_basis(pair[0], x), &act.act_basis(pair[1], y)));
    }
    out
}

/// `τ(h(a)b) = τ(a S̃(h)(b))` on all basis triples.
pub fn check_delta_invariance(
    h: &FiniteHopf,
    delta: &Character,
    a: &FiniteAlgebra,
    act: &HopfAction,
    trace: &Trace,
) -> CheckReport {
    let mut report = CheckReport::new(format!("δ-invariance of a trace on {}", a.name()));
    let (dh, da) = (h.dim(), a.dim());
    let twisted: Vec<Element> = (0..dh).map(|i| twisted_antipode(h, delta, &Element::basis(i))).collect();
    let witness = (0..dh * da * da).find_map(|p| {
        let (i, j, k) = (p / (da * da), (p / da) % da, p % da);
        let (x, y) = (Element::basis(j), Element::basis(k));
        let lhs = trace.eval(&a.multiply(&act.act_basis(i, &x), &y));
        let rhs = trace.eval(&a.multiply(&x, &act.act(&twisted[i], &y)));
        (lhs != rhs).then(|| {
            format!("h={}, a={}, b={}: {lhs} vs {rhs}", h.labels()[i], a.labels()[j], a.labels()[k])
        })
    });
    report.record("delta-invariance", None, witness);
    report
}

/// `γ : H^{⊗n} → Cⁿ(A)` as a matrix on the tuple bases, with
/// `γ(h¹⊗…⊗hⁿ)(x⁰,…,xⁿ) = τ(x⁰ h¹(x¹)⋯hⁿ(xⁿ))`. No invariance check.
pub fn gamma_matrix(h: &FiniteHopf, a: &FiniteAlgebra, act: &HopfAction, trace: &Trace, n: usize) -> SparseMatrix {
    let (dh, da) = (h.dim(), a.dim());
    let rows = da.pow(n as u32 + 1);
    let columns: Vec<Vec<(usize, Scalar)>> = (0..dh.pow(n as u32))
        .into_par_iter()
        .map(|col| {
            let hs = index_tuple(col, dh, n);
            (0..rows)
                .filter_map(|row| {
                    let xs = index_tuple(row, da, n + 1);
                    let mut prod = Element::basis(xs[0]);
                    for (hk, xk) in hs.iter().zip(&xs[1..]) {
                        prod = a.multiply(&prod, &act.act_basis(*hk, &Element::basis(*xk)));
                    }
                    let v = trace.eval(&prod);
                    (!v.is_zero()).then_some((row, v))
                })
                .collect()
        })
        .collect();
    SparseMatrix::from_columns(rows, columns).expect("rows in range")
}

/// The cochain `γ(t)`; refuses unless the action and δ-invariance checks pass.
pub fn characteristic_map(
    h: &FiniteHopf,
    delta: &Character,
    a: &FiniteAlgebra,
    act: &HopfAction,
    trace: &Trace,
    t: &TensorElement,
) -> Result<Cochain> {
    let mut pre = check_action(h, a, act);
    pre.extend(check_delta_invariance(h, delta, a, act, trace));
    if let Some(f) = pre.failures().next() {
        return Err(Error::Precondition(format!("{} fails: {}", f.id, f.witness.clone().unwrap_or_default())));
    }
    let n = t.degree();
    let values = gamma_matrix(h, a, act, trace, n).apply(&t.to_sparse(h.dim()))?;
    Ok(Cochain::from_sparse(a, n, &values))
}

/// `γ ∘ op = op ∘ γ` for every face, degeneracy and cyclic operator whose
/// spaces have degree at most `max_degree`. δ-invariance is reported as an
/// entry, not enforced, so that non-invariant traces show where γ breaks.
pub fn check_gamma_morphism(
    h: &FiniteHopf,
    delta: &Character,
    a: &FiniteAlgebra,
    act: &HopfAction,
    trace: &Trace,
    max_degree: usize,
) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("characteristic map {} -> {}", h.name(), a.name()));
    report.param("max-degree", max_degree);
    report.extend(check_delta_invariance(h, delta, a, act, trace));

    let hopf = HopfCyclicModule::new(h, delta);
    let cochains = AlgebraCochainModule::new(a);
    let gammas: Vec<SparseMatrix> = (0..=max_degree).map(|n| gamma_matrix(h, a, act, trace, n)).collect();

    let mut generators = Vec::new();
    for n in 0..=max_degree {
        generators.extend((0..=n).filter(|_| n >= 1).map(|i| (Generator::Face { i, n }, "gamma-face")));
        if n < max_degree {
            generators.extend((0..=n).map(|i| (Generator::Degeneracy { i, n }, "gamma-degeneracy")));
        }
        generators.push((Generator::Cyclic { n }, "gamma-cyclic"));
    }
    for (g, id) in generators {
        let (src, dst) = (g.source(), g.target());
        let op = hopf.generator_matrix(g)?;
        let lhs = gammas[dst].mul(&op)?;
        let rhs = cochains.generator_matrix(g)?.mul(&gammas[src])?;
        let witness = lhs.first_difference(&rhs)?.map(|c| {
            let e = vec![(c, Scalar::one())];
            format!(
                "{g} on {}: {} vs {}",
                hopf.format_vector(src, &e),
                cochains.format_vector(dst, &lhs.column(c).to_vec()),
                cochains.format_vector(dst, &rhs.column(c).to_vec())
            )
        });
        // one entry per (id, degree); keep the first failure
        match report.entries.iter_mut().find(|e| e.id == id && e.degree == Some(g.target())) {
            Some(e) if e.passed && witness.is_some() => {
                e.passed = false;
                e.witness = witness;
            }
            Some(_) => {}
            None => report.record(id, Some(g.target()), witness),
        }
    }
    report.sort();
    Ok(report)
}
