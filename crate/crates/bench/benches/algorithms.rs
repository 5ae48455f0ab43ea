use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use splitthick::exact::{find_k_split, SearchBudget};
use splitthick::splitters::{pseudoarboricity, split_by_degree};
use splitthick::{fixtures, generators, is_planar, verify_certificate, Graph};

fn grid(side: usize) -> Graph {
    let id = |r: usize, c: usize| r * side + c;
    let mut edges = Vec::new();
    for r in 0..side {
        for c in 0..side {
            if c + 1 < side {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < side {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::new(side * side, edges).unwrap()
}

fn planarity(c: &mut Criterion) {
    let mut group = c.benchmark_group("planarity");
    for side in [10, 30, 100] {
        let g = grid(side);
        group.bench_with_input(BenchmarkId::new("grid", side * side), &g, |b, g| b.iter(|| is_planar(black_box(g))));
    }
    let g = generators::random_planar(5_000, 1.0, &mut ChaCha8Rng::seed_from_u64(1));
    group.bench_function("triangulation/5000", |b| b.iter(|| is_planar(black_box(&g))));
    group.finish();
}

fn splitters(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let dense = generators::random_graph(300, 6_000, &mut rng);
    c.bench_function("pseudoarboricity/300v-6000e", |b| b.iter(|| pseudoarboricity(black_box(&dense))));
    c.bench_function("degree_split/300v-6000e", |b| b.iter(|| split_by_degree(black_box(&dense))));
}

fn exact(c: &mut Criterion) {
    let k6 = generators::complete(6).unwrap();
    let budget = SearchBudget::new(10_000_000, Duration::from_secs(60));
    c.bench_function("exact/K6/k2", |b| b.iter(|| find_k_split(black_box(&k6), 2, budget)));
}

fn verify(c: &mut Criterion) {
    let k12 = fixtures::k12_empire();
    c.bench_function("verify/K12-empire", |b| b.iter(|| verify_certificate(black_box(&k12), 2)));
}

criterion_group!(benches, planarity, splitters, exact, verify);
criterion_main!(benches);
