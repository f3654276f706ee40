use std::hint::black_box;

use branchlab::branching::branch_case_params;
use branchlab::dgx::{self, RPlusRx};
use branchlab::verify::{check_relations, check_transfer, claimed_generators, independence_certificate, EvalContext};
use branchlab::weights::{dimension, WeylType};
use branchlab::{build_case, CaseId, CaseRecord, WeightVector};
use criterion::{criterion_group, criterion_main, Criterion};

fn case(s: &str) -> CaseRecord {
    build_case(s.parse::<CaseId>().unwrap()).unwrap()
}

fn bench_weights(c: &mut Criterion) {
    let d8 = WeylType::D(8);
    let lambda = WeightVector::from_ints(&[6, 3, 3, 2, 1, 1, 0, 0]);
    c.bench_function("weyl_dimension_D8", |b| b.iter(|| dimension(black_box(&d8), black_box(&lambda)).unwrap()));
}

fn bench_cases(c: &mut Criterion) {
    let star = case("star");
    c.bench_function("eval_context_star", |b| {
        b.iter(|| {
            let ctx = EvalContext::new(&star, black_box(&[3, 2, 5])).unwrap();
            ctx.eval_named("C_G").unwrap()
        })
    });
    let vi = case("vi");
    c.bench_function("branch_vi_pi6", |b| b.iter(|| branch_case_params(&vi, black_box(&[6])).unwrap()));

    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    let i3 = case("i:3");
    group.bench_function("relations_i3_bound6", |b| b.iter(|| check_relations(&i3, black_box(6))));
    group.bench_function("transfer_star_bound4", |b| b.iter(|| check_transfer(&star, black_box(4))));
    let gens = claimed_generators(&star).unwrap();
    group.bench_function("independence_star_bound6", |b| {
        b.iter(|| independence_certificate(&star, &gens, black_box(6), 2).unwrap())
    });
    group.finish();
}

fn bench_polynomials(c: &mut Criterion) {
    let rx = RPlusRx::new(6).unwrap();
    let f = dgx::x().pow(3) * dgx::y().pow(2) + dgx::z().pow(2) * dgx::x();
    c.bench_function("r_plus_rx_decompose_deg5", |b| b.iter(|| rx.decompose(black_box(&f)).unwrap()));
}

criterion_group!(benches, bench_weights, bench_cases, bench_polynomials);
criterion_main!(benches);
