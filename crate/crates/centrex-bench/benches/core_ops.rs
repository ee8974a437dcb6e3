//! Timings for the operations the CLI leans on: classification with
//! section search, commutators through kernel pairs, the two chain
//! complexes, UCE construction and peiffication.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use centrex::engine::groups::GroupsOverAb;
use centrex::engine::pxm::PxmVariety;
use centrex::engine::{classify, relative_commutator};
use centrex::homology::{ce_h2, loday_hl2, uce_construct, ChainTheory};
use centrex::samples::{groups, pxms};
use centrex_bench::{current_algebra, parity_extension, pxm_projection};

fn group_ops(c: &mut Criterion) {
    let v = GroupsOverAb;
    let ext = parity_extension();
    c.bench_function("classify s4 parity", |b| {
        b.iter(|| classify(&v, black_box(&ext), 4096).expect("classifiable"))
    });
    c.bench_function("relative commutator s4 parity", |b| {
        b.iter(|| relative_commutator(&v, black_box(&ext)).expect("commutator"))
    });
}

fn homology_ops(c: &mut Criterion) {
    let g = current_algebra();
    c.bench_function("chevalley-eilenberg h2 of the current algebra", |b| {
        b.iter(|| ce_h2(black_box(&g)).expect("lie input"))
    });
    c.bench_function("loday hl2 of the current algebra", |b| {
        b.iter(|| loday_hl2(black_box(&g)).expect("leibniz input"))
    });
    c.bench_function("loday uce of the current algebra", |b| {
        b.iter(|| uce_construct(black_box(&g), ChainTheory::LeibVsVectLie).expect("perfect"))
    });
}

fn pxm_ops(c: &mut Criterion) {
    let v = PxmVariety::over_xmod();
    let ext = pxm_projection();
    c.bench_function("classify crossed module product", |b| {
        b.iter(|| classify(&v, black_box(&ext), 100_000).expect("classifiable"))
    });
    let discrete = pxms::discrete(&groups::symmetric(3));
    c.bench_function("peiffication of discrete s3", |b| {
        b.iter(|| discrete.peiffication().expect("peiffication"))
    });
}

criterion_group!(benches, group_ops, homology_ops, pxm_ops);
criterion_main!(benches);
