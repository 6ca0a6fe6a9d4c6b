use criterion::{black_box, criterion_group, criterion_main, Criterion};

use zetaseries_bench::representative_specs;
use zetaseries_core::closedform::ClosedForms;
use zetaseries_core::harness::{run_suite, Suite};
use zetaseries_core::oracle::sum_series;

fn bench_closed_forms(c: &mut Criterion) {
    let cf = ClosedForms::standard();
    let mut g = c.benchmark_group("closed_form");
    for (name, spec) in representative_specs() {
        g.bench_function(name, |b| b.iter(|| cf.eval_spec(black_box(&spec)).unwrap()));
    }
    g.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    for (name, spec) in representative_specs() {
        g.bench_function(name, |b| b.iter(|| sum_series(black_box(&spec), 1e-12).unwrap()));
    }
    g.finish();
}

fn bench_suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    g.bench_function("all_single_thread", |b| b.iter(|| run_suite(Suite::All, 1e-9, 1).unwrap()));
    g.finish();
}

criterion_group!(benches, bench_closed_forms, bench_oracle, bench_suite);
criterion_main!(benches);
