//! Matrices over an algebra and the pairing of idempotents with cyclic
//! cocycles.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Scalar;
use crate::tensor::Element;

use super::action::Trace;
use super::algebra::FiniteAlgebra;
use super::cochain::Cochain;

/// A `q × q` matrix with entries in `A`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMatrix {
    q: usize,
    entries: Vec<Element>,
}

impl AlgebraMatrix {
    pub fn new(q: usize, entries: Vec<Element>) -> Result<Self> {
        if entries.len() != q * q {
            return Err(Error::DimensionMismatch(format!("{} entries for a {q}x{q} matrix", entries.len())));
        }
        Ok(AlgebraMatrix { q, entries })
    }

    pub fn zero(q: usize) -> Self {
        AlgebraMatrix { q, entries: vec![Element::zero(); q * q] }
    }

    pub fn identity(a: &FiniteAlgebra, q: usize) -> Self {
        let mut m = Self::zero(q);
        for i in 0..q {
            m.entries[i * q + i] = a.unit().clone();
        }
        m
    }

    /// `1 + x·E_ij` with `i ≠ j`; its inverse is `1 − x·E_ij`.
    pub fn elementary(a: &FiniteAlgebra, q: usize, i: usize, j: usize, x: Element) -> Result<Self> {
        if i == j || i >= q || j >= q {
            return Err(Error::IndexOutOfRange(format!("elementary position ({i}, {j}) in size {q}")));
        }
        let mut m = Self::identity(a, q);
        m.entries[i * q + j] = x;
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.q
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.q + j]
    }

    pub fn mul(&self, a: &FiniteAlgebra, other: &Self) -> Result<Self> {
        if self.q != other.q {
            return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", self.q, self.q, other.q, other.q)));
        }
        let q = self.q;
        let mut out = Self::zero(q);
        for i in 0..q {
            for j in 0..q {
                let mut s = Element::zero();
                for k in 0..q {
                    s.add_scaled(&Scalar::one(), &a.multiply(self.get(i, k), other.get(k, j)));
                }
                out.entries[i * q + j] = s;
            }
        }
        Ok(out)
    }

    pub fn is_idempotent(&self, a: &FiniteAlgebra) -> bool {
        self.mul(a, self).map(|sq| &sq == self).unwrap_or(false)
    }

    pub fn show(&self, a: &FiniteAlgebra) -> String {
        let rows: Vec<String> = (0..self.q)
            .map(|i| (0..self.q).map(|j| a.show(self.get(i, j))).collect::<Vec<_>>().join(", "))
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

/// The extension `τ((aᵢⱼ)) = Σ τ(aᵢᵢ)` of a trace to `M_q(A)`.
pub fn trace_extension(trace: &Trace, m: &AlgebraMatrix) -> Scalar {
    (0..m.size()).fold(Scalar::zero(), |s, i| &s + &trace.eval(m.get(i, i)))
}

/// `⟨E, φ⟩`: `Σᵢ φ(Eᵢᵢ)` in degree 0, `Σ φ(Eᵢⱼ, Eⱼₖ, Eₖᵢ)` in degree 2.
pub fn pair_idempotent(a: &FiniteAlgebra, phi: &Cochain, e: &AlgebraMatrix) -> Result<Scalar> {
    if !e.is_idempotent(a) {
        return Err(Error::NotIdempotent);
    }
    let q = e.size();
    match phi.degree() {
        0 => (0..q).try_fold(Scalar::zero(), |s, i| Ok(&s + &phi.eval(&[e.get(i, i).clone()])?)),
        2 => {
            let mut s = Scalar::zero();
            for i in 0..q {
                for j in 0..q {
                    for k in 0..q {
                        let args = [e.get(i, j).clone(), e.get(j, k).clone(), e.get(k, i).clone()];
                        s += &phi.eval(&args)?;
                    }
                }
            }
            Ok(s)
        }
        d => Err(Error::Precondition(format!("pairing implemented in degrees 0 and 2, not {d}"))),
    }
}

/// A random element of `A` with coefficients in `−2..=2`.
pub fn random_element<R: Rng>(rng: &mut R, a: &FiniteAlgebra) -> Element {
    Element::from_terms((0..a.dim()).map(|i| (i, Scalar::from_int(rng.gen_range(-2..=2)))))
}

/// A random invertible `u` with its inverse, as a product of `steps`
/// elementary matrices.
pub fn random_similarity<R: Rng>(
    rng: &mut R,
    a: &FiniteAlgebra,
    q: usize,
    steps: usize,
) -> Result<(AlgebraMatrix, AlgebraMatrix)> {
    if q < 2 {
        return Ok((AlgebraMatrix::identity(a, q), AlgebraMatrix::identity(a, q)));
    }
    let (mut u, mut inv) = (AlgebraMatrix::identity(a, q), AlgebraMatrix::identity(a, q));
    for _ in 0..steps {
        let i = rng.gen_range(0..q);
        let j = (i + rng.gen_range(1..q)) % q;
        let x = random_element(rng, a);
        let minus_x = x.scaled(&Scalar::from_int(-1));
        u = u.mul(a, &AlgebraMatrix::elementary(a, q, i, j, x)?)?;
        inv = AlgebraMatrix::elementary(a, q, i, j, minus_x)?.mul(a, &inv)?;
    }
    Ok((u, inv))
}

/// `u E u⁻¹`
pub fn conjugate(a: &FiniteAlgebra, u: &AlgebraMatrix, e: &AlgebraMatrix, inv: &AlgebraMatrix) -> Result<AlgebraMatrix> {
    u.mul(a, e)?.mul(a, inv)
}
