use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use weylschur::vertexops::{self, CliffordPair};
use weylschur::{weyldet, Partition, SymFunc};

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn symplectic(c: &mut Criterion) {
    let mut group = c.benchmark_group("sp");
    for lambda in [part(&[2, 1]), part(&[3, 2, 1]), part(&[4, 3, 2, 1])] {
        group.bench_with_input(BenchmarkId::new("det", &lambda), &lambda, |b, l| b.iter(|| weyldet::sp(black_box(l))));
        group.bench_with_input(BenchmarkId::new("vertex", &lambda), &lambda, |b, l| {
            b.iter(|| vertexops::sp_vertex(black_box(l)))
        });
    }
    group.finish();
}

fn orthogonal(c: &mut Criterion) {
    let mut group = c.benchmark_group("o");
    for lambda in [part(&[2, 2]), part(&[2, 2, 2])] {
        group.bench_with_input(BenchmarkId::new("det", &lambda), &lambda, |b, l| b.iter(|| weyldet::o(black_box(l))));
        group.bench_with_input(BenchmarkId::new("vertex", &lambda), &lambda, |b, l| {
            b.iter(|| vertexops::o_vertex(black_box(l)))
        });
    }
    group.finish();
}

fn clifford(c: &mut Criterion) {
    let f = SymFunc::p(&[3, 2, 1]);
    c.bench_function("clifford YY(2,1) on p[3,2,1]", |b| {
        b.iter(|| vertexops::clifford_residual(CliffordPair::YY, 2, 1, black_box(&f)))
    });
}

criterion_group!(benches, symplectic, orthogonal, clifford);
criterion_main!(benches);
