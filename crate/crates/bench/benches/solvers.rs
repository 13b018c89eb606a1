use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grundy_core::families::{b_graph, crown, zaker_soltani};
use grundy_core::graph::{canonical_form, enumerate_graphs};
use grundy_core::grundy::{achromatic_number, grundy_value};
use grundy_core::invariants::chromatic_number;
use grundy_core::verify::{run_suite, CheckId, Corpus};
use grundy_core::Graph;

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn grundy(c: &mut Criterion) {
    let mut group = c.benchmark_group("grundy_number");
    for n in [10, 14, 18] {
        for p in [0.3, 0.7] {
            let g = random_graph(n, p, n as u64);
            group.bench_with_input(BenchmarkId::new(format!("gnp_p{p}"), n), &g, |b, g| {
                b.iter(|| grundy_value(black_box(g)).unwrap())
            });
        }
    }
    let families = [
        ("b_graph_8", b_graph(8).unwrap()),
        ("crown_7", crown(7).unwrap()),
        ("zaker_soltani_4_14", zaker_soltani(4, 14).unwrap()),
    ];
    for (name, g) in &families {
        group.bench_function(*name, |b| b.iter(|| grundy_value(black_box(g)).unwrap()));
    }
    group.finish();
}

fn chromatic(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic_number");
    for n in [12, 16, 20] {
        let g = random_graph(n, 0.5, 100 + n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| chromatic_number(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn achromatic(c: &mut Criterion) {
    let g = random_graph(9, 0.4, 9);
    c.bench_function("achromatic_number/gnp9", |b| {
        b.iter(|| achromatic_number(black_box(&g)).unwrap())
    });
}

fn canonical(c: &mut Criterion) {
    let g = random_graph(10, 0.5, 10);
    c.bench_function("canonical_form/gnp10", |b| {
        b.iter(|| canonical_form(black_box(&g)).unwrap())
    });
    c.bench_function("enumerate/n7_cached", |b| {
        b.iter(|| enumerate_graphs(black_box(7)).unwrap().count())
    });
}

fn suite(c: &mut Criterion) {
    let corpus = Corpus::enumerated(6).unwrap();
    let mut group = c.benchmark_group("verify_suite_n6");
    group.sample_size(10);
    for jobs in [1, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(jobs), &jobs, |b, &jobs| {
            b.iter(|| run_suite(&corpus, &CheckId::ALL, jobs).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, grundy, chromatic, achromatic, canonical, suite);
criterion_main!(benches);
