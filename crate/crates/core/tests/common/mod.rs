//! Example data and golden tables shared by the integration tests.

#![allow(dead_code)]

use hopf_cyclic::cohomology::{cyclic_cohomology_bb, cyclic_cohomology_lambda};
use hopf_cyclic::hopf::builders;
use hopf_cyclic::lambda::HopfCyclicModule;
use hopf_cyclic::{Character, FiniteHopf};

/// `(golden name, H, δ)` for every built-in finite example.
pub fn examples() -> Vec<(&'static str, FiniteHopf, Character)> {
    let with = |h: FiniteHopf, d: &str| {
        let delta = h.character(d).unwrap();
        (h, delta)
    };
    let (k, k_eps) = with(builders::trivial(), "epsilon");
    let (z2, z2_eps) = with(builders::cyclic_group(2).unwrap(), "epsilon");
    let (z3, z3_eps) = with(builders::cyclic_group(3).unwrap(), "epsilon");
    let (h4, h4_delta) = with(builders::sweedler_h4(), "delta");
    vec![("trivial", k, k_eps), ("z2", z2, z2_eps), ("z3", z3, z3_eps), ("h4", h4, h4_delta)]
}

pub fn golden(name: &str) -> &'static str {
    match name {
        "trivial" => include_str!("../golden/trivial.txt"),
        "z2" => include_str!("../golden/z2.txt"),
        "z3" => include_str!("../golden/z3.txt"),
        "h4" => include_str!("../golden/h4.txt"),
        "z2_connes_b0" => include_str!("../golden/z2_connes_b0.txt"),
        _ => panic!("no golden table {name}"),
    }
}

/// The library's table in golden format: λ method up to `top`, `(b,B)`
/// truncated at `top + 2` so every listed degree is unflagged.
pub fn library_table(h: &FiniteHopf, delta: &Character, top: usize) -> String {
    let m = HopfCyclicModule::new(h, delta);
    let lambda = cyclic_cohomology_lambda(&m, top).unwrap();
    let bb = cyclic_cohomology_bb(&m, top + 2).unwrap();
    let mut out = String::new();
    for n in 0..=top {
        let (l, b) = (lambda.row(n).unwrap(), bb.row(n).unwrap());
        assert!(!b.boundary, "degree {n} flagged");
        out.push_str(&format!(
            "n={n} dim={} HH={} HC_lambda={} HC_bB={}\n",
            l.dim,
            l.hh.unwrap(),
            l.hc_lambda.unwrap(),
            b.hc_bb.unwrap()
        ));
    }
    out
}
