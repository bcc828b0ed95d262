//! Exact axiom and property checkers. Each runs over a finite sample of
//! basis elements; for a finite-dimensional algebra the full basis is the
//! sample and linearity makes the check complete.

use crate::report::CheckReport;
use crate::tensor::{format_combination, format_tensor, Combination, Tensor};

use super::{
    antipode, as_tensor, coproduct, counit, map_slot, multiply, multiply_slots, tensor_product_slotwise,
    twist_automorphism, twisted_antipode, Functional, HopfAlgebra,
};

fn show<H: HopfAlgebra>(h: &H, a: &Combination<H::Basis>) -> String {
    format_combination(a, |b| h.label(b))
}

fn show_t<H: HopfAlgebra>(h: &H, t: &Tensor<H::Basis>) -> String {
    format_tensor(t, |b| h.label(b))
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, test: impl Fn(T) -> Option<String>) -> Option<String> {
    items.into_iter().find_map(test)
}

fn pairs<B: Clone>(sample: &[B]) -> impl Iterator<Item = (B, B)> + '_ {
    sample.iter().flat_map(move |a| sample.iter().map(move |b| (a.clone(), b.clone())))
}

fn antipode_tensor<H: HopfAlgebra>(h: &H, b: &H::Basis) -> Tensor<H::Basis> {
    as_tensor(&h.antipode_basis(b))
}

/// Associativity, unit, coassociativity, counit, multiplicativity of `Δ`
/// and `ε`, and the antipode identity `S∗I = I∗S = ηε`.
pub fn check_hopf_axioms<H: HopfAlgebra>(h: &H, sample: &[H::Basis]) -> CheckReport {
    let mut report = CheckReport::new("hopf axioms");
    let one = h.unit();
    let e = |b: &H::Basis| Combination::basis(b.clone());

    let assoc = first_failure(pairs(sample), |(a, b)| {
        let ab = h.product_basis(&a, &b);
        sample.iter().find_map(|c| {
            let lhs = multiply(h, &ab, &e(c));
            let rhs = multiply(h, &e(&a), &h.product_basis(&b, c));
            (lhs != rhs).then(|| {
                format!(
                    "({},{},{}): (ab)c = {}, a(bc) = {}",
                    h.label(&a),
                    h.label(&b),
                    h.label(c),
                    show(h, &lhs),
                    show(h, &rhs)
                )
            })
        })
    });
    report.record("associativity", None, assoc);

    let unit = first_failure(sample, |a| {
        let left = multiply(h, &one, &e(a));
        let right = multiply(h, &e(a), &one);
        (left != e(a) || right != e(a))
            .then(|| format!("{}: 1a = {}, a1 = {}", h.label(a), show(h, &left), show(h, &right)))
    });
    report.record("unit", None, unit);

    let coassoc = first_failure(sample, |a| {
        let d = h.coproduct_basis(a);
        let lhs = map_slot(&d, 0, 2, |b| h.coproduct_basis(b));
        let rhs = map_slot(&d, 1, 2, |b| h.coproduct_basis(b));
        (lhs != rhs).then(|| {
            format!("{}: (Δ⊗1)Δ = {}, (1⊗Δ)Δ = {}", h.label(a), show_t(h, &lhs), show_t(h, &rhs))
        })
    });
    report.record("coassociativity", None, coassoc);

    let counit_law = first_failure(sample, |a| {
        let d = h.coproduct_basis(a);
        let eps = |b: &H::Basis| Tensor::scalar(h.counit_basis(b));
        let left = map_slot(&d, 0, 0, eps);
        let right = map_slot(&d, 1, 0, eps);
        let want = as_tensor(&e(a));
        (left != want || right != want).then(|| {
            format!("{}: (ε⊗1)Δ = {}, (1⊗ε)Δ = {}", h.label(a), show_t(h, &left), show_t(h, &right))
        })
    });
    report.record("counit", None, counit_law);

    let mut delta_mult = {
        let d1 = coproduct(h, &one);
        let want = Tensor::from_factors(&[one.clone(), one.clone()]);
        (d1 != want).then(|| format!("Δ(1) = {}", show_t(h, &d1)))
    };
    if delta_mult.is_none() {
        delta_mult = first_failure(pairs(sample), |(a, b)| {
            let lhs = coproduct(h, &h.product_basis(&a, &b));
            let rhs = tensor_product_slotwise(h, &h.coproduct_basis(&a), &h.coproduct_basis(&b));
            (lhs != rhs).then(|| {
                format!(
                    "({},{}): Δ(ab) = {}, Δ(a)Δ(b) = {}",
                    h.label(&a),
                    h.label(&b),
                    show_t(h, &lhs),
                    show_t(h, &rhs)
                )
            })
        });
    }
    report.record("coproduct-multiplicative", None, delta_mult);

    let mut eps_mult = {
        let v = counit(h, &one);
        (!v.is_one()).then(|| format!("ε(1) = {v}"))
    };
    if eps_mult.is_none() {
        eps_mult = first_failure(pairs(sample), |(a, b)| {
            let lhs = counit(h, &h.product_basis(&a, &b));
            let rhs = &h.counit_basis(&a) * &h.counit_basis(&b);
            (lhs != rhs).then(|| format!("({},{}): ε(ab) = {lhs}, ε(a)ε(b) = {rhs}", h.label(&a), h.label(&b)))
        });
    }
    report.record("counit-multiplicative", None, eps_mult);

    let anti = first_failure(sample, |a| {
        let d = h.coproduct_basis(a);
        let left = multiply_slots(h, &map_slot(&d, 0, 1, |b| antipode_tensor(h, b)), 0);
        let right = multiply_slots(h, &map_slot(&d, 1, 1, |b| antipode_tensor(h, b)), 0);
        let want = as_tensor(&one.scaled(&h.counit_basis(a)));
        (left != want || right != want).then(|| {
            format!(
                "{}: S(a₁)a₂ = {}, a₁S(a₂) = {}, ε(a)1 = {}",
                h.label(a),
                show_t(h, &left),
                show_t(h, &right),
                show_t(h, &want)
            )
        })
    });
    report.record("antipode", None, anti);
    report
}

/// The properties of the twisted antipode that hold for every character:
/// antimultiplicativity, the twisted coproduct rule, `ε∘S̃ = δ`, and the
/// factorization `S̃ = S∘σ` with `σ` multiplicative.
pub fn check_twisted_properties<H, D>(h: &H, delta: &D, sample: &[H::Basis]) -> CheckReport
where
    H: HopfAlgebra,
    D: Functional<H::Basis>,
{
    let mut report = CheckReport::new("twisted antipode properties");
    let e = |b: &H::Basis| Combination::basis(b.clone());
    let st = |a: &Combination<H::Basis>| twisted_antipode(h, delta, a);

    let unit = {
        let v = st(&h.unit());
        (v != h.unit()).then(|| format!("S̃(1) = {}", show(h, &v)))
    };
    report.record("twisted-antipode-unit", None, unit);

    let anti = first_failure(pairs(sample), |(a, b)| {
        let lhs = st(&h.product_basis(&a, &b));
        let rhs = multiply(h, &st(&e(&b)), &st(&e(&a)));
        (lhs != rhs).then(|| {
            format!(
                "({},{}): S̃(ab) = {}, S̃(b)S̃(a) = {}",
                h.label(&a),
                h.label(&b),
                show(h, &lhs),
                show(h, &rhs)
            )
        })
    });
    report.record("twisted-antipode-antimultiplicative", None, anti);

    let co = first_failure(sample, |a| {
        let lhs = coproduct(h, &st(&e(a)));
        let mut rhs = Tensor::zero(2);
        for (pair, c) in h.coproduct_basis(a).iter() {
            let term = Tensor::from_factors(&[h.antipode_basis(&pair[1]), st(&e(&pair[0]))]);
            rhs.add_scaled(c, &term);
        }
        (lhs != rhs).then(|| {
            format!("{}: ΔS̃(h) = {}, S(h₂)⊗S̃(h₁) = {}", h.label(a), show_t(h, &lhs), show_t(h, &rhs))
        })
    });
    report.record("twisted-antipode-coproduct", None, co);

    let cu = first_failure(sample, |a| {
        let lhs = counit(h, &st(&e(a)));
        let rhs = delta.value(a);
        (lhs != rhs).then(|| format!("{}: ε(S̃(h)) = {lhs}, δ(h) = {rhs}", h.label(a)))
    });
    report.record("twisted-antipode-counit", None, cu);

    let fact = first_failure(sample, |a| {
        let lhs = st(&e(a));
        let rhs = antipode(h, &twist_automorphism(h, delta, &e(a)));
        (lhs != rhs).then(|| format!("{}: S̃ = {}, S∘σ = {}", h.label(a), show(h, &lhs), show(h, &rhs)))
    });
    report.record("twisted-antipode-factorization", None, fact);

    let sigma = |a: &Combination<H::Basis>| twist_automorphism(h, delta, a);
    let sm = first_failure(pairs(sample), |(a, b)| {
        let lhs = sigma(&h.product_basis(&a, &b));
        let rhs = multiply(h, &sigma(&e(&a)), &sigma(&e(&b)));
        (lhs != rhs).then(|| {
            format!(
                "({},{}): σ(ab) = {}, σ(a)σ(b) = {}",
                h.label(&a),
                h.label(&b),
                show(h, &lhs),
                show(h, &rhs)
            )
        })
    });
    report.record("twist-multiplicative", None, sm);
    report
}

/// Outcome of the `S̃² = I` test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionCheck<B> {
    pub holds: bool,
    /// First basis element with `S̃²(b) ≠ b`.
    pub witness: Option<B>,
    pub detail: Option<String>,
}

pub fn check_involution<H, D>(h: &H, delta: &D, sample: &[H::Basis]) -> InvolutionCheck<H::Basis>
where
    H: HopfAlgebra,
    D: Functional<H::Basis>,
{
    for b in sample {
        let e = Combination::basis(b.clone());
        let twice = twisted_antipode(h, delta, &twisted_antipode(h, delta, &e));
        if twice != e {
            return InvolutionCheck {
                holds: false,
                witness: Some(b.clone()),
                detail: Some(format!("S̃²({}) = {}", h.label(b), show(h, &twice))),
            };
        }
    }
    InvolutionCheck { holds: true, witness: None, detail: None }
}
