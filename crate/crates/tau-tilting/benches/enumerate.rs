//! Compares the data-parallel mutation kernel against the sequential
//! fallback on path algebras of linearly ordered quivers.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use quiver_algebra::{Arrow, BoundQuiverPresentation, BuildOptions, FieldSpec, PathAlgebra};
use tau_tilting::{enumerate, EnumerationOptions};

fn linear_quiver(n: usize) -> PathAlgebra {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<Arrow> = (0..n - 1)
        .map(|i| Arrow {
            name: format!("a{}", i + 1),
            source: i,
            target: i + 1,
        })
        .collect();
    let pres =
        BoundQuiverPresentation::new(FieldSpec::prime(2).unwrap(), vertices, arrows, vec![])
            .unwrap();
    PathAlgebra::build(pres, BuildOptions::default()).unwrap()
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [3usize, 4] {
        let alg = linear_quiver(n);
        for (tag, parallel) in [("parallel", true), ("sequential", false)] {
            let opts = EnumerationOptions {
                parallel,
                ..EnumerationOptions::default()
            };
            group.bench_with_input(
                BenchmarkId::new(format!("linear-{n}"), tag),
                &alg,
                |b, alg| b.iter(|| enumerate(alg, &opts).unwrap()),
            );
        }
    }
    group.finish();
}

criterion_group!(benches, bench_enumerate);
criterion_main!(benches);
