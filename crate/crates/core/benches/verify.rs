use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use beck_core::verify::{run, Grid, Identity};
use beck_core::Strategy;

fn strategies(c: &mut Criterion) {
    let grid = Grid::new((2..=5).collect(), None, 0, 30).unwrap();
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for identity in [Identity::Beck3, Identity::Xi] {
        for (label, strategy) in [
            ("sequential", Strategy::Sequential),
            ("parallel", Strategy::Parallel),
        ] {
            group.bench_with_input(
                BenchmarkId::new(identity.to_string(), label),
                &strategy,
                |b, &s| b.iter(|| black_box(run(identity, &grid, s).unwrap().summary)),
            );
        }
    }
    group.finish();
}

criterion_group!(benches, strategies);
criterion_main!(benches);
