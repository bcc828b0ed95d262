//! Morphisms of the cyclic category as periodic staircases.
//!
//! A morphism `[p] → [q]` is a nondecreasing `f: ℤ → ℤ` with
//! `f(x + p + 1) = f(x) + q + 1`, taken modulo `f ~ f + (q + 1)`. It is
//! stored as `f(0), …, f(p)` shifted so that `0 ≤ f(0) ≤ q`; two morphisms
//! are equal exactly when these value lists are equal.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// A generator, named by the object index it is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// `δᵢ: [n−1] → [n]`, `0 ≤ i ≤ n`, `n ≥ 1`
    Face { i: usize, n: usize },
    /// `σᵢ: [n+1] → [n]`, `0 ≤ i ≤ n`
    Degeneracy { i: usize, n: usize },
    /// `τₙ: [n] → [n]`
    Cyclic { n: usize },
}

impl Generator {
    pub fn source(&self) -> usize {
        match *self {
            Generator::Face { n, .. } => n - 1,
            Generator::Degeneracy { n, .. } => n + 1,
            Generator::Cyclic { n } => n,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            Generator::Face { n, .. } | Generator::Degeneracy { n, .. } | Generator::Cyclic { n } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Generator::Face { i, n } => n >= 1 && i <= n,
            Generator::Degeneracy { i, n } => i <= n,
            Generator::Cyclic { .. } => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("{self}")))
        }
    }

    pub fn morphism(&self) -> LambdaMorphism {
        let values = match *self {
            Generator::Face { i, n } => (0..n as i64).map(|x| if x < i as i64 { x } else { x + 1 }).collect(),
            Generator::Degeneracy { i, n } => {
                (0..(n + 2) as i64).map(|x| if x <= i as i64 { x } else { x - 1 }).collect()
            }
            Generator::Cyclic { n } => (0..=n as i64).map(|x| x - 1).collect(),
        };
        LambdaMorphism::from_values(self.source(), self.target(), values).expect("generator staircases are valid")
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Face { i, n } => write!(f, "d{i}[{n}]"),
            Generator::Degeneracy { i, n } => write!(f, "s{i}[{n}]"),
            Generator::Cyclic { n } => write!(f, "t[{n}]"),
        }
    }
}

/// A composable word; `gens[0]` is applied last, so `[τ₂, δ₀]` is `τ₂∘δ₀`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    source: usize,
    gens: Vec<Generator>,
}

impl Word {
    pub fn identity(n: usize) -> Self {
        Word { source: n, gens: Vec::new() }
    }

    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        let last = gens.last().ok_or_else(|| Error::NotComposable("empty word has no object".into()))?;
        for g in &gens {
            g.validate()?;
        }
        for pair in gens.windows(2) {
            if pair[0].source() != pair[1].target() {
                return Err(Error::NotComposable(format!(
                    "{} cannot follow {}",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(Word { source: last.source(), gens })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.gens.first().map_or(self.source, Generator::target)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn morphism(&self) -> LambdaMorphism {
        self.gens
            .iter()
            .rev()
            .fold(LambdaMorphism::identity(self.source), |acc, g| {
                g.morphism().compose(&acc).expect("word is composable")
            })
    }

    /// A random composable word of length `len` with every object in `0..=max_object`.
    pub fn random(rng: &mut impl Rng, source: usize, len: usize, max_object: usize) -> Self {
        let mut applied = Vec::with_capacity(len);
        let mut at = source;
        for _ in 0..len {
            let mut options = vec![Generator::Cyclic { n: at }];
            if at < max_object {
                options.extend((0..=at + 1).map(|i| Generator::Face { i, n: at + 1 }));
            }
            if at >= 1 {
                options.extend((0..at).map(|i| Generator::Degeneracy { i, n: at - 1 }));
            }
            let g = options[rng.gen_range(0..options.len())];
            at = g.target();
            applied.push(g);
        }
        applied.reverse();
        if applied.is_empty() {
            Word::identity(source)
        } else {
            Word::new(applied).expect("random walk is composable")
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "id[{}]", self.source);
        }
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("∘"))
    }
}

/// A morphism `[source] → [target]` in staircase normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaMorphism {
    source: usize,
    target: usize,
    values: Vec<i64>,
}

impl LambdaMorphism {
    /// Normalizes `f(0..=source)`; checks monotonicity across one period.
    pub fn from_values(source: usize, target: usize, values: Vec<i64>) -> Result<Self> {
        let (n, m) = ((source + 1) as i64, (target + 1) as i64);
        if values.len() != n as usize {
            return Err(Error::DimensionMismatch(format!("{} values for object [{source}]", values.len())));
        }
        let monotone = values.windows(2).all(|w| w[0] <= w[1]) && values[n as usize - 1] <= values[0] + m;
        if !monotone {
            return Err(Error::Precondition(format!("{values:?} is not a nondecreasing staircase")));
        }
        let shift = values[0].div_euclid(m) * m;
        Ok(LambdaMorphism { source, target, values: values.into_iter().map(|v| v - shift).collect() })
    }

    pub fn identity(n: usize) -> Self {
        LambdaMorphism { source: n, target: n, values: (0..=n as i64).collect() }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn eval(&self, x: i64) -> i64 {
        let (n, m) = ((self.source + 1) as i64, (self.target + 1) as i64);
        self.values[x.rem_euclid(n) as usize] + m * x.div_euclid(n)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LambdaMorphism) -> Result<LambdaMorphism> {
        if other.target != self.source {
            return Err(Error::NotComposable(format!(
                "[{}] → [{}] then [{}] → [{}]",
                other.source, other.target, self.source, self.target
            )));
        }
        let values = (0..=other.source as i64).map(|x| self.eval(other.eval(x))).collect();
        LambdaMorphism::from_values(other.source, self.target, values)
    }

    /// Factors as (faces) ∘ (degeneracies) ∘ `τᵏ`, with the cyclic power at
    /// the source, faces in decreasing and degeneracies in increasing index
    /// order.
    pub fn canonical_word(&self) -> Word {
        let (n, m) = ((self.source + 1) as i64, (self.target + 1) as i64);
        for k in 0..n {
            // g(x) = f(x + k) satisfies f = g ∘ τᵏ
            let g: Vec<i64> = (0..n).map(|x| self.eval(x + k)).collect();
            let shift = g[0].div_euclid(m) * m;
            let g: Vec<i64> = g.into_iter().map(|v| v - shift).collect();
            if g[n as usize - 1] >= m {
                continue;
            }
            let mut gens = Vec::new();
            // image misses these target points; apply the smallest face first
            let missing: Vec<usize> = (0..m).filter(|y| !g.contains(y)).map(|y| y as usize).collect();
            let mut obj = self.target;
            for &y in missing.iter().rev() {
                gens.push(Generator::Face { i: y, n: obj });
                obj -= 1;
            }
            let repeats: Vec<usize> = (0..n as usize - 1).filter(|&x| g[x] == g[x + 1]).collect();
            for &x in &repeats {
                gens.push(Generator::Degeneracy { i: x, n: obj });
                obj += 1;
            }
            debug_assert_eq!(obj, self.source);
            gens.extend(std::iter::repeat_n(Generator::Cyclic { n: self.source }, k as usize));
            return if gens.is_empty() {
                Word::identity(self.source)
            } else {
                Word::new(gens).expect("canonical word is composable")
            };
        }
        unreachable!("every cyclic morphism factors through a simplicial one")
    }
}

impl fmt::Display for LambdaMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]→[{}] {:?}", self.source, self.target, self.values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(gens: &[Generator]) -> LambdaMorphism {
        Word::new(gens.to_vec()).unwrap().morphism()
    }

    use Generator::{Cyclic as T, Degeneracy as S, Face as D};

    #[test]
    fn cyclic_power_is_identity() {
        for n in 0..6 {
            let word = Word::new(vec![T { n }; n + 1]).unwrap();
            assert_eq!(word.morphism(), LambdaMorphism::identity(n));
            assert_ne!(n > 0, T { n }.morphism() == LambdaMorphism::identity(n));
        }
    }

    #[test]
    fn cyclic_relations_on_staircases() {
        for n in 1..5 {
            assert_eq!(w(&[T { n }, D { i: 0, n }]), D { i: n, n }.morphism());
            for i in 1..=n {
                assert_eq!(w(&[T { n }, D { i, n }]), w(&[D { i: i - 1, n }, T { n: n - 1 }]));
                assert_eq!(w(&[T { n }, S { i, n }]), w(&[S { i: i - 1, n }, T { n: n + 1 }]));
            }
            assert_eq!(w(&[T { n }, S { i: 0, n }]), w(&[S { i: n, n }, T { n: n + 1 }, T { n: n + 1 }]));
        }
    }

    #[test]
    fn face_identity_on_staircases() {
        for n in 2..5 {
            for j in 1..=n {
                for i in 0..j {
                    assert_eq!(w(&[D { i: j, n }, D { i, n: n - 1 }]), w(&[D { i, n }, D { i: j - 1, n: n - 1 }]));
                }
            }
        }
    }

    #[test]
    fn canonical_word_recovers_morphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let src = rng.gen_range(0..5);
            let len = rng.gen_range(0..8);
            let f = Word::random(&mut rng, src, len, 5).morphism();
            let word = f.canonical_word();
            assert_eq!(word.morphism(), f, "{word}");
            assert_eq!(word.source(), f.source());
        }
    }

    #[test]
    fn composition_is_associative_with_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let a = Word::random(&mut rng, 2, 3, 4);
            let b = Word::random(&mut rng, a.target(), 3, 4);
            let c = Word::random(&mut rng, b.target(), 3, 4);
            let (fa, fb, fc) = (a.morphism(), b.morphism(), c.morphism());
            assert_eq!(fc.compose(&fb).unwrap().compose(&fa).unwrap(), fc.compose(&fb.compose(&fa).unwrap()).unwrap());
            assert_eq!(LambdaMorphism::identity(fa.target()).compose(&fa).unwrap(), fa);
        }
    }

    #[test]
    fn non_composable_words_are_rejected() {
        assert!(matches!(Word::new(vec![T { n: 2 }, T { n: 3 }]), Err(Error::NotComposable(_))));
        assert!(Word::new(vec![D { i: 4, n: 2 }]).is_err());
        assert!(LambdaMorphism::from_values(1, 1, vec![1, 0]).is_err());
    }
}
