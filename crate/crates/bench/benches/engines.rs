use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use skewcode_core::fp_poly::factor_xn_minus_1;
use skewcode_core::{
    parse_polynomial, Automorphism, GeneratorForm, GrayImageCode, PrimeField, SkewCyclicCode, SkewPoly,
};

fn code(p: u32, s: u32, n: usize, g: &str) -> SkewCyclicCode {
    let aut = Automorphism::new(p, s).unwrap();
    let g = parse_polynomial(g, &aut).unwrap();
    SkewCyclicCode::construct(&aut, n, GeneratorForm::Monic { g }).unwrap()
}

fn skew_arithmetic(c: &mut Criterion) {
    let aut = Automorphism::new(5, 4).unwrap();
    let g = parse_polynomial("x^4 + (4+3*u)*x^3 + 4*u*x^2 + (1+2*u)*x + (4+u)", &aut).unwrap();
    let big = SkewPoly::x_n_minus_one(&aut, 60);
    c.bench_function("skew_mul_deg4_by_deg60", |b| b.iter(|| black_box(&g).mul(black_box(&big)).unwrap()));
    c.bench_function("skew_right_divide_deg60", |b| {
        b.iter(|| black_box(&big).right_divide(black_box(&g)).unwrap())
    });
}

fn factorization(c: &mut Criterion) {
    let field = PrimeField::new(3).unwrap();
    c.bench_function("factor_x242_minus_1_over_f3", |b| b.iter(|| factor_xn_minus_1(field, black_box(242))));
}

fn distances(c: &mut Criterion) {
    let n8 = GrayImageCode::from_code(&code(3, 2, 8, "x^3 + u*x^2 + x + 1"), 2).unwrap();
    c.bench_function("exhaustive_distance_16_10", |b| b.iter(|| n8.min_distance_exhaustive().unwrap()));

    let n12 = code(3, 2, 12, "x^5 + (1+u)*x^4 + u*x^3 + 2*u*x^2 + (2+2*u)*x + (2+2*u)");
    let image = GrayImageCode::from_code(&n12, 2).unwrap();
    let mut group = c.benchmark_group("bounded");
    group.sample_size(10);
    group.bench_function("bounded_weight_24_14", |b| b.iter(|| image.min_weight_bounded(8).unwrap()));
    group.finish();
}

criterion_group!(benches, skew_arithmetic, factorization, distances);
criterion_main!(benches);
