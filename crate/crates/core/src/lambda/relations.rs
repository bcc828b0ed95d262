//! The defining relations of the cyclic category, checked three ways: as
//! operator-matrix identities on a finite module, as element identities on
//! samples for rule-based algebras, and on staircase normal forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::hopf::{Functional, HopfAlgebra};
use crate::linalg::Scalar;
use crate::report::CheckReport;
use crate::symbolic::{Envelope, Monomial};
use crate::tensor::{format_tensor, Tensor};

use super::module::{cyclic_power_closed_form, hopf_cyclic, hopf_word, interpret_word, CyclicModule};
use super::morphism::{Generator, Word};

use Generator::{Cyclic as T, Degeneracy as S, Face as D};

/// One instance `lhs = rhs` of a relation at degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    pub id: &'static str,
    pub degree: usize,
    pub lhs: Word,
    pub rhs: Word,
}

fn word(gens: &[Generator]) -> Word {
    Word::new(gens.to_vec()).expect("relation words are composable")
}

/// Every instance whose objects all lie in `0..=max_object`.
pub fn relation_instances(max_object: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    let mut push = |id, degree, lhs: Word, rhs: Word| {
        let top = [lhs.source(), lhs.target(), rhs.source(), rhs.target()];
        let inner = lhs.generators().iter().chain(rhs.generators()).flat_map(|g| [g.source(), g.target()]);
        if top.into_iter().chain(inner).all(|o| o <= max_object) {
            out.push(RelationInstance { id, degree, lhs, rhs });
        }
    };
    for n in 0..=max_object + 1 {
        // δⱼδᵢ = δᵢδ_{j−1}, i < j, maps [n−2] → [n]
        if n >= 2 {
            for j in 1..=n {
                for i in 0..j {
                    push("face-face", n, word(&[D { i: j, n }, D { i, n: n - 1 }]), word(&[D { i, n }, D { i: j - 1, n: n - 1 }]));
                }
            }
        }
        // σⱼσᵢ = σᵢσ_{j+1}, i ≤ j, maps [n+2] → [n]
        for j in 0..=n {
            for i in 0..=j {
                push(
                    "degeneracy-degeneracy",
                    n,
                    word(&[S { i: j, n }, S { i, n: n + 1 }]),
                    word(&[S { i, n }, S { i: j + 1, n: n + 1 }]),
                );
            }
        }
        // σⱼδᵢ on [n] → [n]
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = word(&[S { i: j, n }, D { i, n: n + 1 }]);
                if i < j {
                    push("degeneracy-face-lower", n, lhs, word(&[D { i, n }, S { i: j - 1, n: n - 1 }]));
                } else if i == j || i == j + 1 {
                    push("degeneracy-face-identity", n, lhs, Word::identity(n));
                } else {
                    push("degeneracy-face-upper", n, lhs, word(&[D { i: i - 1, n }, S { i: j, n: n - 1 }]));
                }
            }
        }
        if n >= 1 {
            push("cyclic-face-zero", n, word(&[T { n }, D { i: 0, n }]), word(&[D { i: n, n }]));
            for i in 1..=n {
                push("cyclic-face", n, word(&[T { n }, D { i, n }]), word(&[D { i: i - 1, n }, T { n: n - 1 }]));
                push(
                    "cyclic-degeneracy",
                    n,
                    word(&[T { n }, S { i, n }]),
                    word(&[S { i: i - 1, n }, T { n: n + 1 }]),
                );
            }
        }
        push(
            "cyclic-degeneracy-zero",
            n,
            word(&[T { n }, S { i: 0, n }]),
            word(&[S { i: n, n }, T { n: n + 1 }, T { n: n + 1 }]),
        );
        push("cyclic-power", n, word(&vec![T { n }; n + 1]), Word::identity(n));
    }
    out
}

/// Groups per-instance outcomes into one entry per (relation, degree),
/// keeping the first witness.
fn collect(title: &str, results: Vec<(&'static str, usize, Option<String>)>) -> CheckReport {
    let mut report = CheckReport::new(title);
    let mut keys: Vec<(usize, &'static str)> = results.iter().map(|(id, n, _)| (*n, *id)).collect();
    keys.sort();
    keys.dedup();
    for (n, id) in keys {
        let witness = results.iter().filter(|r| r.0 == id && r.1 == n).find_map(|r| r.2.clone());
        report.record(id, Some(n), witness);
    }
    report
}

/// Matrix mode: every instance as an exact operator identity.
pub fn check_relations<M: CyclicModule>(m: &M, max_degree: usize) -> CheckReport {
    let results = relation_instances(max_degree)
        .into_par_iter()
        .map(|r| {
            let outcome = (|| -> crate::Result<Option<String>> {
                let (lhs, rhs) = (interpret_word(m, &r.lhs)?, interpret_word(m, &r.rhs)?);
                Ok(lhs.first_difference(&rhs)?.map(|c| {
                    let src = r.lhs.source();
                    let basis = m.format_vector(src, &vec![(c, Scalar::one())]);
                    let tgt = r.lhs.target();
                    format!(
                        "{} vs {} at {basis}: lhs = {}, rhs = {}",
                        r.lhs,
                        r.rhs,
                        m.format_vector(tgt, &lhs.column(c).to_vec()),
                        m.format_vector(tgt, &rhs.column(c).to_vec())
                    )
                }))
            })();
            let witness = outcome.unwrap_or_else(|e| Some(format!("error: {e}")));
            (r.id, r.degree, witness)
        })
        .collect();
    let mut report = collect(&format!("cyclic relations: {}", m.name()), results);
    report.params.push(("max_degree".into(), max_degree.to_string()));
    report
}

/// Element mode: each instance evaluated on the sample tensors of its source degree.
pub fn check_relations_on_sample<H, D>(
    h: &H,
    delta: &D,
    max_degree: usize,
    sample: impl Fn(usize) -> Vec<Tensor<H::Basis>> + Sync,
) -> CheckReport
where
    H: HopfAlgebra,
    D: Functional<H::Basis>,
{
    let instances = relation_instances(max_degree);
    let samples: Vec<Vec<Tensor<H::Basis>>> = (0..=max_degree).map(&sample).collect();
    let results = instances
        .into_par_iter()
        .map(|r| {
            let witness = samples[r.lhs.source()].iter().find_map(|t| {
                let lhs = hopf_word(h, delta, &r.lhs, t);
                let rhs = hopf_word(h, delta, &r.rhs, t);
                match (lhs, rhs) {
                    (Ok(a), Ok(b)) if a == b => None,
                    (Ok(a), Ok(b)) => Some(format!(
                        "{} vs {} at {}: lhs = {}, rhs = {}",
                        r.lhs,
                        r.rhs,
                        format_tensor(t, |b| h.label(b)),
                        format_tensor(&a, |b| h.label(b)),
                        format_tensor(&b, |b| h.label(b))
                    )),
                    (Err(e), _) | (_, Err(e)) => Some(format!("error: {e}")),
                }
            });
            (r.id, r.degree, witness)
        })
        .collect();
    let mut report = collect("cyclic relations (sampled)", results);
    report.params.push(("max_degree".into(), max_degree.to_string()));
    report
}

/// The relations on staircase normal forms.
pub fn check_relations_lambda(max_degree: usize) -> CheckReport {
    let results = relation_instances(max_degree)
        .into_iter()
        .map(|r| {
            let (a, b) = (r.lhs.morphism(), r.rhs.morphism());
            let witness = (a != b).then(|| format!("{} = {a} but {} = {b}", r.lhs, r.rhs));
            (r.id, r.degree, witness)
        })
        .collect();
    collect("cyclic relations (normal forms)", results)
}

/// Random words compared against the canonical word of their normal form.
pub fn check_functoriality<M: CyclicModule>(m: &M, words_per_degree: usize, max_degree: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new(format!("functoriality: {}", m.name()));
    report.param("seed", seed).param("words_per_degree", words_per_degree);
    for n in 0..=max_degree {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(n as u64));
        let words: Vec<Word> = (0..words_per_degree)
            .map(|_| {
                let len = rng.gen_range(1..=6);
                Word::random(&mut rng, n, len, max_degree)
            })
            .collect();
        let witness = words.par_iter().find_map_first(|w| {
            let canon = w.morphism().canonical_word();
            let a = interpret_word(m, w).ok()?;
            let b = interpret_word(m, &canon).ok()?;
            (a != b).then(|| format!("{w} and {canon} share a normal form but differ"))
        });
        report.record("functoriality", Some(n), witness);
    }
    report
}

/// Iterating `τₙ` `j` times against the closed form, `0 ≤ j ≤ n+1`.
pub fn check_cyclic_power_formula<H, D>(h: &H, delta: &D, tensors: &[Tensor<H::Basis>]) -> CheckReport
where
    H: HopfAlgebra,
    D: Functional<H::Basis>,
{
    let mut report = CheckReport::new("cyclic power formula");
    let mut degrees: Vec<usize> = tensors.iter().map(Tensor::degree).collect();
    degrees.sort();
    degrees.dedup();
    for n in degrees {
        let witness = tensors.iter().filter(|t| t.degree() == n).find_map(|t| {
            let mut iterated = t.clone();
            for j in 0..=n + 1 {
                let closed = cyclic_power_closed_form(h, delta, j, t);
                if closed != iterated {
                    return Some(format!(
                        "j = {j} at {}: iterated = {}, closed form = {}",
                        format_tensor(t, |b| h.label(b)),
                        format_tensor(&iterated, |b| h.label(b)),
                        format_tensor(&closed, |b| h.label(b))
                    ));
                }
                iterated = hopf_cyclic(h, delta, &iterated);
            }
            None
        });
        report.record("cyclic-power-formula", Some(n), witness);
    }
    report
}

/// A random combination of up to four basis tuples with coefficients in `−3..=3`.
pub fn random_tensor(rng: &mut impl Rng, dim: usize, degree: usize) -> Tensor<usize> {
    let mut t = Tensor::zero(degree);
    for _ in 0..rng.gen_range(1..=4) {
        let tuple = (0..degree).map(|_| rng.gen_range(0..dim)).collect();
        t.add_term(tuple, Scalar::from_int(rng.gen_range(-3..=3)));
    }
    t
}

/// Monomial tensors of total degree at most `max_total`, plus `extra`
/// seeded random combinations of them.
pub fn pbw_sample(u: &Envelope, degree: usize, max_total: u32, extra: usize, seed: u64) -> Vec<Tensor<Monomial>> {
    let monos = u.monomials_up_to(max_total);
    let mut tuples: Vec<(Vec<Monomial>, u32)> = vec![(Vec::new(), 0)];
    for _ in 0..degree {
        tuples = tuples
            .into_iter()
            .flat_map(|(t, d)| {
                monos.iter().filter(move |m| d + m.degree() <= max_total).map(move |m| {
                    let mut t = t.clone();
                    t.push(m.clone());
                    (t, d + m.degree())
                })
            })
            .collect();
    }
    let mut out: Vec<Tensor<Monomial>> = tuples.into_iter().map(|(t, _)| Tensor::basis(t)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(degree as u64));
    let base = out.len();
    for _ in 0..extra {
        let mut t = Tensor::zero(degree);
        for _ in 0..3 {
            let pick = &out[rng.gen_range(0..base)];
            t.add_scaled(&Scalar::from_int(rng.gen_range(-3..=3)), pick);
        }
        out.push(t);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::FiniteAlgebra;
    use crate::hopf::{builders, Character};
    use crate::lambda::module::{AlgebraCochainModule, HopfCyclicModule};
    use crate::symbolic::LieAlgebra;

    #[test]
    fn instance_scope_respects_max_object() {
        let all = relation_instances(2);
        assert!(all.iter().all(|r| r.lhs.source() <= 2 && r.lhs.target() <= 2));
        assert!(all.iter().any(|r| r.id == "cyclic-power" && r.degree == 0));
        assert!(check_relations_lambda(5).all_passed());
    }

    #[test]
    fn group_algebra_relations_hold() {
        let h = builders::cyclic_group(2).unwrap();
        let m = HopfCyclicModule::new(&h, &Character::counit(&h).unwrap());
        let r = check_relations(&m, 3);
        assert!(r.all_passed(), "{}", r.render());
    }

    #[test]
    fn h4_with_counit_breaks_tau_power() {
        let h = builders::sweedler_h4();
        let m = HopfCyclicModule::new(&h, &Character::counit(&h).unwrap());
        let r = check_relations(&m, 2);
        let e = r.find("cyclic-power", Some(2)).unwrap();
        assert!(!e.passed);
        assert!(e.witness.as_ref().unwrap().contains('x'));
    }

    #[test]
    fn algebra_cochains_form_a_cyclic_module() {
        let m = AlgebraCochainModule::new(&FiniteAlgebra::matrix_algebra(2));
        let r = check_relations(&m, 2);
        assert!(r.all_passed(), "{}", r.render());
    }

    #[test]
    fn pbw_relations_on_sample() {
        let u = Envelope::new(LieAlgebra::ax_plus_b());
        let delta = u.modular_character();
        let r = check_relations_on_sample(&u, &delta, 2, |n| pbw_sample(&u, n, 2, 5, 1));
        assert!(r.all_passed(), "{}", r.render());
    }
}
