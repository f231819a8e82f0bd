//! Point-evaluation benchmarks: both Bessel regimes, the partner family, and
//! the damping coefficient.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use isobessel::{bessel_j, damping_g, partner_j, GammaParam, Order, PartnerSpec};

fn bench_eval(c: &mut Criterion) {
    let n3 = Order::new(3).unwrap();
    let spec = PartnerSpec::new(Order::new(2).unwrap(), GammaParam::Finite(1.0));

    let mut group = c.benchmark_group("eval");
    // r = 4 stays in the power series; r = 25 forces the backward recurrence.
    group.bench_function("bessel_j_series", |b| {
        b.iter(|| bessel_j(black_box(n3), black_box(4.0)).unwrap())
    });
    group.bench_function("bessel_j_recurrence", |b| {
        b.iter(|| bessel_j(black_box(n3), black_box(25.0)).unwrap())
    });
    group.bench_function("partner_j", |b| {
        b.iter(|| partner_j(black_box(spec), black_box(10.0)).unwrap())
    });
    group.bench_function("damping_g", |b| {
        b.iter(|| damping_g(black_box(spec), black_box(0.7)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_eval);
criterion_main!(benches);
