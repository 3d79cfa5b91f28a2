use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, Criterion};

use nilops_bench::{engine, word_batch};
use nilops_core::linearize::delta;
use nilops_core::magma::Generator;
use nilops_core::onevar::{OneVarTables, Variety};
use nilops_core::parse::parse_polynomial;

fn bench_table_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("table_build");
    group
        .sample_size(10)
        .measurement_time(Duration::from_secs(20));
    group.bench_function("nil4_to_degree_9", |b| {
        b.iter(|| black_box(engine(Variety::Nil4, 9)))
    });
    group.bench_function("nil4_b5_to_degree_8", |b| {
        b.iter(|| black_box(engine(Variety::Nil4B5, 8)))
    });
    group.finish();
}

fn bench_reduce(c: &mut Criterion) {
    let e = engine(Variety::Nil4, 9);
    let batch = word_batch(9);
    c.bench_function("reduce_all_degree_9_words", |b| {
        b.iter(|| {
            for p in &batch {
                black_box(e.reduce(black_box(p)).unwrap());
            }
        })
    });
}

fn bench_linearize(c: &mut Criterion) {
    let target = parse_polynomial("x^4").unwrap();
    let args: Vec<_> = ["y", "x", "x^3", "x^3"]
        .iter()
        .map(|s| parse_polynomial(s).unwrap())
        .collect();
    c.bench_function("delta_four_arguments_on_x4", |b| {
        b.iter(|| black_box(delta(black_box(&args), black_box(&target), Generator::X)))
    });
}

fn bench_onevar(c: &mut Criterion) {
    let mut group = c.benchmark_group("one_variable_tables");
    group.sample_size(10);
    group.bench_function("nil4_to_degree_12", |b| {
        b.iter(|| black_box(OneVarTables::build(Variety::Nil4, 12).unwrap()))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_table_build,
    bench_reduce,
    bench_linearize,
    bench_onevar
);
criterion_main!(benches);
