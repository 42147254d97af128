use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rb_shuffle::algebra::Ctx;
use rb_shuffle::cli::bench::generic_pair;
use rb_shuffle::free_rb::mixable_shuffle;

fn shuffle_growth(c: &mut Criterion) {
    let mut group = c.benchmark_group("mixable_shuffle");
    for lambda in ["0", "1"] {
        for k in 1..=5usize {
            let (h, x, y) = generic_pair(k, k, Ctx::rational(lambda));
            group.bench_with_input(BenchmarkId::new(format!("lambda={lambda}"), k), &k, |b, _| {
                b.iter(|| mixable_shuffle(&h, &x, &y).terms().len())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, shuffle_growth);
criterion_main!(benches);
