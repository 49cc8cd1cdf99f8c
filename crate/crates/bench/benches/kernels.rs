use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use superjm::exact::{int, jordan_chevalley, rank};
use superjm::functors::check_fusion_pair;
use superjm::jm::jm_triple;
use superjm::liesuper::gl_superalgebra;
use superjm::nilform::{block_multiplicities, deligne_filtration, BlockType};
use superjm::sampling::{random_matrix, random_odd_nilpotent, rng};
use superjm::Parity;

fn exact_kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("exact");
    for n in [8, 16, 24] {
        let m = random_matrix(&mut rng(1), n, n, 5);
        g.bench_with_input(BenchmarkId::new("rank", n), &m, |b, m| {
            b.iter(|| rank(black_box(m)))
        });
    }
    let m = random_matrix(&mut rng(2), 6, 6, 3);
    g.bench_function("jordan_chevalley_6", |b| {
        b.iter(|| jordan_chevalley(black_box(&m)).unwrap())
    });
    g.finish();
}

fn nilpotent_kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("nilform");
    let (op, _) = random_odd_nilpotent(&mut rng(3), 8, 8);
    g.bench_function("block_multiplicities_8_8", |b| {
        b.iter(|| block_multiplicities(black_box(&op)))
    });
    g.bench_function("deligne_8_8", |b| {
        b.iter(|| deligne_filtration(black_box(&op)).unwrap())
    });
    g.finish();
}

fn fusion_kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("fusion");
    g.sample_size(10);
    for len in [6, 11] {
        let (a, b) = (
            BlockType::new(len, Parity::Even),
            BlockType::new(len, Parity::Odd),
        );
        g.bench_with_input(
            BenchmarkId::new("tensor_pair", len),
            &(a, b),
            |bch, &(a, b)| bch.iter(|| check_fusion_pair(a, b).unwrap()),
        );
    }
    g.finish();
}

fn triple_kernels(c: &mut Criterion) {
    let (alg, v) = gl_superalgebra(1, 2).unwrap();
    let x = alg
        .element(&[
            ("E12", int(2)),
            ("E13", int(1)),
            ("E21", int(-1)),
            ("E31", int(2)),
        ])
        .unwrap();
    c.bench_function("jm_triple_gl12", |b| {
        b.iter(|| jm_triple(black_box(&v), black_box(&x)).unwrap())
    });
}

criterion_group!(
    benches,
    exact_kernels,
    nilpotent_kernels,
    fusion_kernels,
    triple_kernels
);
criterion_main!(benches);
