use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use zetaseries_bench::clausen_angles;
use zetaseries_core::specfun::{clausen, ein, inc_gamma_int, polylog, polylog_cut, trigamma, zeta_eta, CutBranch};

fn bench_clausen(c: &mut Criterion) {
    let angles = clausen_angles();
    let mut g = c.benchmark_group("clausen");
    for n in [2u32, 3, 5] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| angles.iter().map(|&t| clausen(n, black_box(t)).unwrap().value).sum::<f64>())
        });
    }
    g.finish();
}

fn bench_polylog(c: &mut Criterion) {
    let mut g = c.benchmark_group("polylog");
    for x in [-1.0, -0.3, 0.5, 0.9] {
        g.bench_with_input(BenchmarkId::new("Li3", x), &x, |b, &x| b.iter(|| polylog(3, black_box(x)).unwrap()));
    }
    g.bench_function("Li2_cut_e^pi", |b| {
        let x = std::f64::consts::PI.exp();
        b.iter(|| polylog_cut(2, black_box(x), CutBranch::Lower).unwrap())
    });
    g.finish();
}

fn bench_misc(c: &mut Criterion) {
    c.bench_function("zeta_eta_7", |b| b.iter(|| zeta_eta(black_box(7)).unwrap()));
    c.bench_function("ein_5", |b| b.iter(|| ein(black_box(5.0)).unwrap()));
    c.bench_function("inc_gamma_4_2pi", |b| {
        b.iter(|| inc_gamma_int(4, black_box(2.0 * std::f64::consts::PI)).unwrap())
    });
    c.bench_function("trigamma_third", |b| b.iter(|| trigamma(black_box(1.0 / 3.0)).unwrap()));
}

criterion_group!(benches, bench_clausen, bench_polylog, bench_misc);
criterion_main!(benches);
