use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use idemfree::constants::{davenport, erdos_burgess, strong_erdos_burgess};
use idemfree::construct::group_nil_chain;
use idemfree::enumerate::enumerate_semigroups;
use idemfree::seqprod::{any_order_products, natural_order_products};
use idemfree::Seq;
use idemfree_bench::{extremal, group_by_right_zero};

fn constants(c: &mut Criterion) {
    let mut group = c.benchmark_group("constants");
    for spec in ["mono:5:2,mono:4:3", "gbn:3:3,mono:3:2,gbn:2:2"] {
        let (s, _) = extremal(spec);
        group.bench_with_input(BenchmarkId::new("erdos_burgess", spec), &s, |b, s| {
            b.iter(|| erdos_burgess(black_box(s)))
        });
    }
    let s = group_nil_chain(5, 5).unwrap();
    group.bench_function("davenport/group_nil_chain(5,5)", |b| {
        b.iter(|| davenport(black_box(&s)))
    });
    let s = group_by_right_zero(3);
    group.bench_function("strong_erdos_burgess/z2_x_rz3", |b| {
        b.iter(|| strong_erdos_burgess(black_box(&s)))
    });
    group.finish();
}

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group("products");
    let s = group_by_right_zero(4);
    for len in [6, 10, 14] {
        let t = Seq::from_indices(&(0..len).map(|i| (i * 3 + 1) % 8).collect::<Vec<_>>());
        group.bench_with_input(BenchmarkId::new("any_order", len), &t, |b, t| {
            b.iter(|| any_order_products(black_box(&s), black_box(t)))
        });
        group.bench_with_input(BenchmarkId::new("natural_order", len), &t, |b, t| {
            b.iter(|| natural_order_products(black_box(&s), black_box(t)))
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("order4", |b| {
        b.iter(|| enumerate_semigroups(4, false, false).unwrap().count())
    });
    group.bench_function("order4_dedup", |b| {
        b.iter(|| enumerate_semigroups(4, false, true).unwrap().count())
    });
    group.finish();
}

criterion_group!(benches, constants, products, enumeration);
criterion_main!(benches);
