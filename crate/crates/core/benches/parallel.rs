use combdepth::axioms::{check_superadditivity, Instance, MeasureOracle, SUBSET_CAP};
use combdepth::corpus::{generate, CorpusSpec, Family};
use combdepth::regions::region_dims;
use combdepth::MeasureId;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    vec![
        (
            "sequential",
            rayon::ThreadPoolBuilder::new()
                .num_threads(1)
                .build()
                .unwrap(),
        ),
        ("parallel", rayon::ThreadPoolBuilder::new().build().unwrap()),
    ]
}

fn bench_regions(c: &mut Criterion) {
    let mut group = c.benchmark_group("region_dims");
    group.sample_size(10);
    for n in [6usize, 9] {
        let s = generate(&CorpusSpec::new(Family::RandomRational, n, 2, 7))
            .unwrap()
            .set;
        for (name, pool) in pools() {
            group.bench_with_input(BenchmarkId::new(name, n), &s, |b, s| {
                b.iter(|| pool.install(|| region_dims(s, MeasureId::Td, None).unwrap()))
            });
        }
    }
    group.finish();
}

fn bench_axioms(c: &mut Criterion) {
    let mut group = c.benchmark_group("superadditivity");
    group.sample_size(10);
    let corpus: Vec<Instance> = (0..4)
        .map(|seed| {
            let s = generate(&CorpusSpec::new(Family::Clusters, 6, 2, seed))
                .unwrap()
                .set;
            Instance::new(format!("clusters-{seed}"), s)
        })
        .collect();
    let m = MeasureOracle::new(MeasureId::Td);
    for (name, pool) in pools() {
        group.bench_function(name, |b| {
            b.iter(|| pool.install(|| check_superadditivity(&m, &corpus, SUBSET_CAP).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_regions, bench_axioms);
criterion_main!(benches);
