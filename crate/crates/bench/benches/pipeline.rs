use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cubic3_bench::{base_for, LEVELS};
use cubic3_core::level_maps::build_yd1_star;
use cubic3_core::oracle::oracle_set;
use cubic3_core::parametrization::enumerate_y11;
use cubic3_core::trinomials::{classify, emit, pipeline_points};
use cubic3_core::SetKind;

fn base(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_y11");
    for st_max in [8, 16, 27] {
        g.bench_with_input(BenchmarkId::from_parameter(st_max), &st_max, |b, &s| {
            b.iter(|| enumerate_y11(black_box(s)).unwrap())
        });
    }
    g.finish();
}

fn raise(c: &mut Criterion) {
    let base = base_for(100);
    let mut g = c.benchmark_group("build_yd1_star");
    for d in [7, 49, 91] {
        g.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| build_yd1_star(black_box(d), &base).unwrap())
        });
    }
    g.finish();
}

fn trinomials(c: &mut Criterion) {
    let mut g = c.benchmark_group("emit");
    for d in LEVELS {
        g.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| emit(black_box(d), 12).unwrap())
        });
    }
    g.finish();
    let mut g = c.benchmark_group("pipeline_points");
    for d in LEVELS {
        g.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| pipeline_points(black_box(d), 12).unwrap())
        });
    }
    g.finish();
    c.bench_function("classify/63,-171", |b| {
        b.iter(|| classify(black_box(63), black_box(-171)).unwrap())
    });
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle_set");
    g.sample_size(10);
    for d in [7, 63] {
        g.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| oracle_set(SetKind::X1DStar, black_box(d), 50).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, base, raise, trinomials, oracle);
criterion_main!(benches);
