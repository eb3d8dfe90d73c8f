use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strel_core::chainring::{cokernel_shape, howell_form, kernel, RMatrix, RingSpec};

fn random_matrix(r: RingSpec, rows: usize, cols: usize, seed: u64) -> RMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    RMatrix::from_fn(r, rows, cols, |_, _| rng.gen_range(0..r.modulus()))
}

fn bench_howell(c: &mut Criterion) {
    let mut group = c.benchmark_group("howell");
    for (p, n) in [(2u64, 4u32), (5, 2)] {
        let r = RingSpec::new(p, n).unwrap();
        for size in [8usize, 32, 96] {
            let a = random_matrix(r, size, size, 11);
            let id = format!("{p}^{n}/{size}");
            group.bench_with_input(BenchmarkId::new("form", &id), &a, |b, a| {
                b.iter(|| howell_form(black_box(a)))
            });
            group.bench_with_input(BenchmarkId::new("kernel", &id), &a, |b, a| {
                b.iter(|| kernel(black_box(a)))
            });
            group.bench_with_input(BenchmarkId::new("cokernel_shape", &id), &a, |b, a| {
                b.iter(|| cokernel_shape(black_box(a)))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_howell);
criterion_main!(benches);
