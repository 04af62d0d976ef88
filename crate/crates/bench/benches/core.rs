use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cyset_bench::{element, fixtures, tuple};
use cyset_core::calculus::{left_fraction, omega, pi};
use cyset_core::census::{class_histogram, Mode};
use cyset_core::cycle_set::validate;
use cyset_core::germ::class_of;
use cyset_core::zappa::{sylow_decompose, sylow_recompose};
use cyset_core::Germ;

fn monomial(c: &mut Criterion) {
    let mut group = c.benchmark_group("multiply");
    for (name, s) in fixtures() {
        let (a, b) = (element(&s, 40), element(&s, 37));
        group.bench_function(name, |bench| bench.iter(|| black_box(&a) * black_box(&b)));
    }
    group.finish();
}

fn calculus(c: &mut Criterion) {
    let mut group = c.benchmark_group("pi");
    for (name, s) in fixtures() {
        for len in [8, 64] {
            let t = tuple(s.n(), len);
            group.bench_with_input(BenchmarkId::new(name, len), &t, |bench, t| {
                bench.iter(|| pi(&s, black_box(t)).unwrap())
            });
        }
    }
    group.finish();

    let s = cyset_core::examples::exdec();
    let t = tuple(s.n(), 64);
    c.bench_function("omega/exdec/64", |bench| bench.iter(|| omega(&s, black_box(&t)).unwrap()));
    let g = &element(&s, 30) * &element(&s, 21).inverse();
    c.bench_function("left_fraction/exdec", |bench| bench.iter(|| left_fraction(&s, black_box(&g)).unwrap()));
}

fn structure(c: &mut Criterion) {
    for (name, s) in fixtures() {
        c.bench_function(&format!("validate/{name}"), |bench| bench.iter(|| validate(black_box(&s))));
        c.bench_function(&format!("class/{name}"), |bench| bench.iter(|| class_of(black_box(&s)).unwrap()));
    }
    let s = cyset_core::examples::ex1();
    let germ = Germ::new(&s, None).unwrap();
    c.bench_function("germ_closure/ex1", |bench| {
        bench.iter(|| germ.generated_order(1 << 20).unwrap())
    });
    let s = cyset_core::examples::exdec();
    c.bench_function("sylow_round_trip/exdec", |bench| {
        bench.iter(|| sylow_recompose(&sylow_decompose(black_box(&s)).unwrap()).unwrap())
    });
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for n in [4, 5] {
        group.bench_with_input(BenchmarkId::new("labeled", n), &n, |bench, &n| {
            bench.iter(|| class_histogram(n, Mode::Labeled, 6).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("iso", n), &n, |bench, &n| {
            bench.iter(|| class_histogram(n, Mode::UpToIso, 6).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, monomial, calculus, structure, census);
criterion_main!(benches);
