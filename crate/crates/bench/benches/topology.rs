use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use octoplane::sampling::rng;
use octoplane::topology::{
    builtin_cw, fiber_linking_number, multiplication_bidegree, smith_normal_form, CoefficientSpec, IntMatrix,
};
use rand::Rng;

fn snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith-normal-form");
    for n in [4, 8, 16] {
        let mut r = rng(n as u64);
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| r.gen_range(-20..=20)).collect())
            .collect();
        let m = IntMatrix::from_rows(&rows);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| smith_normal_form(black_box(m)))
        });
    }
    group.finish();
}

fn cohomology(c: &mut Criterion) {
    let op2 = builtin_cw("OP2").unwrap();
    c.bench_function("cohomology/OP2", |b| {
        b.iter(|| op2.cohomology_table(black_box(CoefficientSpec::Modular(2))))
    });
}

fn hopf(c: &mut Criterion) {
    let mut group = c.benchmark_group("hopf");
    group.sample_size(10);
    group.bench_function("bidegree/level3", |b| {
        b.iter(|| multiplication_bidegree(3, 100, 42).unwrap())
    });
    for segments in [128, 256, 512] {
        group.bench_with_input(BenchmarkId::new("linking", segments), &segments, |b, &n| {
            b.iter(|| fiber_linking_number(&[0.0, 0.0, 1.0], &[0.0, 0.0, -1.0], n).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, snf, cohomology, hopf);
criterion_main!(benches);
