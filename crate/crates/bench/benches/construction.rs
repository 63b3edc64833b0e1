use bipconn_bench::{witness_case, SIZES};
use bipconn_core::{
    build_packing, build_witness, kappa_bipartite, normalize, oracle_kappa_k,
    oracle_spanning_packing, verify_witness,
};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn packing(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_packing");
    for (a, b) in SIZES {
        let order = normalize(a, b).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{a}x{b}")),
            &order,
            |bench, o| bench.iter(|| build_packing(black_box(o)).unwrap()),
        );
    }
    group.finish();
}

fn witness(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_witness");
    for (a, b) in SIZES {
        let (order, k, i) = witness_case(a, b);
        group.bench_function(BenchmarkId::from_parameter(format!("{a}x{b}")), |bench| {
            bench.iter(|| build_witness(black_box(&order), k, i).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("verify_witness");
    for (a, b) in SIZES {
        let (order, k, i) = witness_case(a, b);
        let w = build_witness(&order, k, i).unwrap();
        group.bench_function(BenchmarkId::from_parameter(format!("{a}x{b}")), |bench| {
            bench.iter(|| verify_witness(&order, black_box(&w)))
        });
    }
    group.finish();
}

fn closed_form(c: &mut Criterion) {
    c.bench_function("kappa_table_200", |bench| {
        bench.iter(|| {
            let order = normalize(black_box(120), black_box(200)).unwrap();
            (2..=order.vertex_count())
                .map(|k| kappa_bipartite(&order, k).unwrap())
                .sum::<usize>()
        })
    });
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("packing_4x5", |bench| {
        bench.iter(|| oracle_spanning_packing(black_box(4), black_box(5)).unwrap())
    });
    group.bench_function("kappa_4x4_k4", |bench| {
        bench.iter(|| oracle_kappa_k(black_box(4), black_box(4), 4).unwrap())
    });
    group.finish();
}

criterion_group!(benches, packing, witness, closed_form, oracle);
criterion_main!(benches);
