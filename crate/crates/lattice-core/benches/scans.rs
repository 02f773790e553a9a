//! Sequential vs parallel property scans on Boolean cubes.
//!
//! Run with `cargo bench -p lattice-core`. The parallel variants are only
//! compiled with the default `parallel` feature; with
//! `--no-default-features` the bench still runs the sequential baselines.

use criterion::{criterion_group, criterion_main, Criterion};
use lattice_core::{fixtures, FiniteLattice};
use std::hint::black_box;

fn distributivity_pred(l: &FiniteLattice) -> impl Fn(usize) -> bool + Sync + '_ {
    let n = l.len();
    move |idx: usize| {
        let x = idx / (n * n);
        let y = (idx / n) % n;
        let z = idx % n;
        l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))
    }
}

fn bench_scans(c: &mut Criterion) {
    let cube = fixtures::boolean(7).as_lattice().unwrap();
    let n = cube.len();
    let mut group = c.benchmark_group("distributivity-scan-b7");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let pred = distributivity_pred(&cube);
            black_box(lattice_core::scan::first_hit_seq(n * n * n, pred))
        })
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let pred = distributivity_pred(&cube);
            black_box(lattice_core::scan::first_hit_par(n * n * n, pred))
        })
    });
    group.finish();

    let mut group = c.benchmark_group("full-property-suite-b6");
    let cube6 = fixtures::boolean(6).as_lattice().unwrap();
    group.bench_function("default-entry", |b| {
        b.iter(|| {
            black_box(cube6.is_distributive());
            black_box(cube6.is_upper_semimodular());
            black_box(cube6.is_join_semidistributive());
        })
    });
    group.finish();
}

criterion_group!(benches, bench_scans);
criterion_main!(benches);
