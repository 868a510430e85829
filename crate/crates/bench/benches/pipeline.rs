use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use nczeta::cyclic::DEFAULT_ENUMERATION_GUARD;
use nczeta::examples::closed_p;
use nczeta::{euler_product, guess_annihilator, ExampleId, SequenceOptions, TruncatedSeries};

fn a_sequence(c: &mut Criterion) {
    let mut group = c.benchmark_group("a_sequence");
    group.sample_size(10);
    let cases = [
        ("paper2x2", ExampleId::TwoByTwo, 10),
        ("paper2x2", ExampleId::TwoByTwo, 16),
        ("kontsevich:2", ExampleId::Kontsevich(2), 10),
        ("paperdxd:3", ExampleId::DByD(3), 8),
        ("paperdxd:4", ExampleId::DByD(4), 8),
    ];
    for (name, id, n) in cases {
        let m = id.build().unwrap();
        group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
            b.iter(|| m.a_sequence(n, SequenceOptions::default()).unwrap())
        });
    }
    let m = ExampleId::TwoByTwo.build().unwrap();
    let unpruned = SequenceOptions {
        prune: false,
        ..SequenceOptions::default()
    };
    group.bench_function("paper2x2/unpruned/10", |b| {
        b.iter(|| m.a_sequence(10, unpruned).unwrap())
    });
    group.finish();
}

fn euler(c: &mut Criterion) {
    let mut group = c.benchmark_group("euler_product");
    group.sample_size(10);
    for (name, id) in [
        ("paper2x2", ExampleId::TwoByTwo),
        ("paperdxd:3", ExampleId::DByD(3)),
    ] {
        let m = id.build().unwrap();
        for l in [4, 6] {
            group.bench_with_input(BenchmarkId::new(name, l), &l, |b, &l| {
                b.iter(|| euler_product(&m, l, DEFAULT_ENUMERATION_GUARD).unwrap())
            });
        }
    }
    group.finish();
}

fn guess(c: &mut Criterion) {
    let mut group = c.benchmark_group("guess_annihilator");
    group.sample_size(10);
    let p = closed_p(ExampleId::TwoByTwo, 40).unwrap();
    group.bench_function("paper2x2 P (6,2)", |b| {
        b.iter(|| guess_annihilator(black_box(&p), 6, 2).unwrap())
    });
    let e = TruncatedSeries::variable(40).exp().unwrap();
    group.bench_function("exp(t) (4,4)", |b| {
        b.iter(|| guess_annihilator(black_box(&e), 4, 4).unwrap())
    });
    group.finish();
}

criterion_group!(benches, a_sequence, euler, guess);
criterion_main!(benches);
