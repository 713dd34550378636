use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use igel::encode::igel_encode_all_with;
use igel::families::{gen_random_regular, gen_rook};
use igel::gamma::gamma_encode_all_with;
use igel::io::GraphCollection;
use igel::survey::run_survey_with;
use igel::{EncoderSpec, Execution};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn encode_all(c: &mut Criterion) {
    let mut group = c.benchmark_group("igel_encode_all");
    for n in [1_000usize, 10_000, 100_000] {
        let g = gen_random_regular(n, 3, 1).unwrap();
        group.throughput(Throughput::Elements(n as u64));
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| igel_encode_all_with(black_box(g), 2, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn gamma_all(c: &mut Criterion) {
    let mut group = c.benchmark_group("gamma_encode_all");
    let g = gen_random_regular(10_000, 4, 2).unwrap();
    group.throughput(Throughput::Elements(10_000));
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| gamma_encode_all_with(black_box(&g), 2, exec).unwrap())
        });
    }
    group.finish();
}

fn survey(c: &mut Criterion) {
    let mut group = c.benchmark_group("survey");
    let graphs = (0..200)
        .map(|s| gen_random_regular(40, 4, s).unwrap())
        .chain([gen_rook(4).unwrap()]);
    let coll = GraphCollection::new(graphs.collect(), "bench");
    let spec = EncoderSpec::IgelConcat { alphas: vec![1, 2] };
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| run_survey_with(black_box(&coll), &spec, false, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, encode_all, gamma_all, survey);
criterion_main!(benches);
