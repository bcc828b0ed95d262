use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use hopf_cyclic::cohomology::{check_mixed_identities, cohomology, Method};
use hopf_cyclic::hopf::builders;
use hopf_cyclic::lambda::{check_relations, HopfCyclicModule};
use hopf_cyclic::linalg::rank;
use hopf_cyclic::Character;

fn h4_module() -> HopfCyclicModule {
    let h = builders::sweedler_h4();
    let delta = h.character("delta").unwrap();
    HopfCyclicModule::new(&h, &delta)
}

fn bench_rank(c: &mut Criterion) {
    let m = h4_module();
    let b4 = hopf_cyclic::cohomology::hochschild_b(&m, 4).unwrap();
    c.bench_function("rank b4 on H4 (256x64)", |b| b.iter(|| rank(black_box(&b4))));
}

fn bench_relations(c: &mut Criterion) {
    let m = h4_module();
    c.bench_function("relations H4 n<=4", |b| b.iter(|| check_relations(black_box(&m), 4)));
    let z2 = builders::cyclic_group(2).unwrap();
    let eps = Character::counit(&z2).unwrap();
    let m = HopfCyclicModule::new(&z2, &eps);
    c.bench_function("relations Z2 n<=4", |b| b.iter(|| check_relations(black_box(&m), 4)));
}

fn bench_cohomology(c: &mut Criterion) {
    let mut g = c.benchmark_group("cohomology");
    g.sample_size(10);
    let m = h4_module();
    for method in [Method::Lambda, Method::BB] {
        g.bench_function(format!("H4 {method} n<=4"), |b| b.iter(|| cohomology(black_box(&m), 4, method)));
    }
    g.bench_function("H4 mixed identities n<=4", |b| b.iter(|| check_mixed_identities(black_box(&m), 4)));
    g.finish();
}

criterion_group!(benches, bench_rank, bench_relations, bench_cohomology);
criterion_main!(benches);
