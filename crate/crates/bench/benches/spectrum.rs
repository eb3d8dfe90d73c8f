use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use strel_core::chainring::RingSpec;
use strel_core::group::FiniteGroup;
use strel_core::grouprep::{hom_space, tensor_g, trivial, w_module};
use strel_core::spectrum::support;
use strel_core::stable::is_weakly_projective;

fn setting(p: u64, n: u32) -> (RingSpec, Arc<FiniteGroup>) {
    (
        RingSpec::new(p, n).unwrap(),
        Arc::new(FiniteGroup::cyclic(p as usize).unwrap()),
    )
}

fn bench_spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum");
    for (p, n) in [(2u64, 4u32), (3, 3), (5, 2)] {
        let (r, g) = setting(p, n);
        let w = w_module(r, &g, n).unwrap();
        let one = trivial(r, &g, n).unwrap();
        group.bench_function(format!("support W_n {p}^{n}"), |b| {
            b.iter(|| support(black_box(&w)))
        });
        group.bench_function(format!("support 1_n {p}^{n}"), |b| {
            b.iter(|| support(black_box(&one)))
        });
        let t = tensor_g(&w_module(r, &g, 1).unwrap(), &w).unwrap();
        group.bench_function(format!("weakly projective W_1⊗W_n {p}^{n}"), |b| {
            b.iter(|| is_weakly_projective(black_box(&t)))
        });
        group.bench_function(format!("hom_space W_n {p}^{n}"), |b| {
            b.iter(|| hom_space(black_box(&w), &w))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_spectrum);
criterion_main!(benches);
