//! Multilinear forms on an algebra and the cyclic cocycle conditions.

use crate::cohomology::{cyclic_lambda, hochschild_b};
use crate::error::{Error, Result};
use crate::lambda::{AlgebraCochainModule, CyclicModule};
use crate::linalg::{Scalar, SparseVec};
use crate::report::CheckReport;
use crate::tensor::{index_tuple, tuple_index, Element};

use super::action::Trace;
use super::algebra::FiniteAlgebra;

/// An `(n+1)`-linear form `φ(x⁰,…,xⁿ)`, stored by its values on basis tuples
/// in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    dim: usize,
    values: Vec<Scalar>,
}

impl Cochain {
    pub fn from_fn(a: &FiniteAlgebra, degree: usize, f: impl Fn(&[usize]) -> Scalar) -> Self {
        let dim = a.dim();
        let values = (0..dim.pow(degree as u32 + 1)).map(|p| f(&index_tuple(p, dim, degree + 1))).collect();
        Cochain { degree, dim, values }
    }

    pub fn from_sparse(a: &FiniteAlgebra, degree: usize, v: &SparseVec) -> Self {
        let mut values = vec![Scalar::zero(); a.dim().pow(degree as u32 + 1)];
        for (i, c) in v {
            values[*i] = c.clone();
        }
        Cochain { degree, dim: a.dim(), values }
    }

    /// `τ(x⁰x¹⋯xⁿ)`
    pub fn trace_of_product(a: &FiniteAlgebra, trace: &Trace, degree: usize) -> Self {
        Cochain::from_fn(a, degree, |xs| {
            let prod = xs[1..].iter().fold(Element::basis(xs[0]), |p, &x| a.multiply(&p, &Element::basis(x)));
            trace.eval(&prod)
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, tuple: &[usize]) -> Scalar {
        self.values[tuple_index(tuple, self.dim)].clone()
    }

    /// `φ(x⁰,…,xⁿ)` on arbitrary elements, by multilinearity.
    pub fn eval(&self, args: &[Element]) -> Result<Scalar> {
        if args.len() != self.degree + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} arguments for a cochain of degree {}",
                args.len(),
                self.degree
            )));
        }
        let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for x in args {
            partial = partial
                .into_iter()
                .flat_map(|(t, c)| {
                    x.iter().map(move |(i, d)| {
                        let mut t = t.clone();
                        t.push(*i);
                        (t, &c * d)
                    })
                })
                .collect();
        }
        let mut out = Scalar::zero();
        for (t, c) in partial {
            out += &(&c * &self.value(&t));
        }
        Ok(out)
    }

    pub fn to_sparse(&self) -> SparseVec {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect()
    }
}

/// Cyclicity and the Hochschild condition. Degree 2 is checked by the
/// explicit formulas on all basis triples and quadruples; other degrees
/// through `λφ = φ` and `bφ = 0`.
pub fn check_cyclic_cocycle(a: &FiniteAlgebra, phi: &Cochain) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("cyclic cocycle on {}", a.name()));
    report.param("degree", phi.degree);
    let d = a.dim();
    let l = |i: usize| a.labels()[i].clone();
    let e = Element::basis;
    if phi.degree == 2 {
        let cyclic = (0..d * d * d).find_map(|p| {
            let x = index_tuple(p, d, 3);
            let (lhs, rhs) = (phi.value(&[x[1], x[2], x[0]]), phi.value(&x));
            (lhs != rhs).then(|| format!("({}, {}, {}): {lhs} vs {rhs}", l(x[0]), l(x[1]), l(x[2])))
        });
        report.record("cyclicity", Some(2), cyclic);
        let mut hochschild = None;
        for p in 0..d.pow(4) {
            let x = index_tuple(p, d, 4);
            let terms = [
                phi.eval(&[a.multiply(&e(x[0]), &e(x[1])), e(x[2]), e(x[3])])?,
                -&phi.eval(&[e(x[0]), a.multiply(&e(x[1]), &e(x[2])), e(x[3])])?,
                phi.eval(&[e(x[0]), e(x[1]), a.multiply(&e(x[2]), &e(x[3]))])?,
                -&phi.eval(&[a.multiply(&e(x[3]), &e(x[0])), e(x[1]), e(x[2])])?,
            ];
            let sum = terms.iter().fold(Scalar::zero(), |s, t| &s + t);
            if !sum.is_zero() {
                hochschild = Some(format!("({}, {}, {}, {}): {sum}", l(x[0]), l(x[1]), l(x[2]), l(x[3])));
                break;
            }
        }
        report.record("hochschild", Some(2), hochschild);
    } else {
        let m = AlgebraCochainModule::new(a);
        let n = phi.degree;
        let v = phi.to_sparse();
        let rotated = cyclic_lambda(&m, n)?.apply(&v)?;
        let cyclic = (rotated != v).then(|| format!("λφ = {}", m.format_vector(n, &rotated)));
        report.record("cyclicity", Some(n), cyclic);
        let bphi = hochschild_b(&m, n + 1)?.apply(&v)?;
        let hochschild = (!bphi.is_empty()).then(|| format!("bφ = {}", m.format_vector(n + 1, &bphi)));
        report.record("hochschild", Some(n), hochschild);
    }
    Ok(report)
}
