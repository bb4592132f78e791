use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use corona_core::corona::{CopySpec, CoronaSpec};
use corona_core::graph::Graph;
use corona_core::polyrat::{charpoly_with, polymatrix_det_with, PolyMatrix};
use corona_core::spectra::{theorem_charpoly_with, SpectralKind, DEFAULT_ORACLE_LIMIT};
use corona_core::suite::{small_suite, verify};
use corona_core::Strategy;

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn mixed_spec(n: usize) -> CoronaSpec {
    let pool = [
        CopySpec::all(Graph::complete(4).unwrap()),
        CopySpec::from_indices(Graph::cycle(5).unwrap(), vec![0, 2]).unwrap(),
        CopySpec::from_indices(Graph::path(4).unwrap(), vec![1]).unwrap(),
        CopySpec::from_indices(Graph::complete_bipartite(2, 3).unwrap(), vec![0, 1, 2]).unwrap(),
    ];
    let copies = (0..n).map(|i| pool[i % pool.len()].clone()).collect();
    CoronaSpec::new(Graph::cycle(n).unwrap(), copies).unwrap()
}

fn theorem(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorem_charpoly");
    group.sample_size(10);
    for n in [8, 16] {
        let spec = mixed_spec(n);
        for (name, s) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &spec, |b, spec| {
                b.iter(|| theorem_charpoly_with(black_box(spec), SpectralKind::Laplacian, s).unwrap())
            });
        }
    }
    group.finish();
}

fn determinant(c: &mut Criterion) {
    let mut group = c.benchmark_group("polymatrix_det");
    group.sample_size(10);
    let m = PolyMatrix::char_matrix(&Graph::cycle(24).unwrap().adjacency()).unwrap();
    for (name, s) in STRATEGIES {
        group.bench_function(name, |b| b.iter(|| polymatrix_det_with(black_box(&m), s).unwrap()));
    }
    group.finish();
}

fn faddeev(c: &mut Criterion) {
    let mut group = c.benchmark_group("charpoly");
    group.sample_size(10);
    let a = Graph::complete_bipartite(12, 12).unwrap().laplacian();
    for (name, s) in STRATEGIES {
        group.bench_function(name, |b| b.iter(|| charpoly_with(black_box(&a), s).unwrap()));
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_suite");
    group.sample_size(10);
    let cases = small_suite().unwrap();
    for (name, s) in STRATEGIES {
        group.bench_function(name, |b| {
            b.iter(|| verify(black_box(&cases), &SpectralKind::ALL, DEFAULT_ORACLE_LIMIT, s).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, theorem, determinant, faddeev, suite);
criterion_main!(benches);
