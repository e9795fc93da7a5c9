use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use dfchow_core::pushout::{blow_up, build_equalizer, TwistorChow};
use dfchow_core::surfaces::classify_all;

fn equalizer(c: &mut Criterion) {
    let p3 = TwistorChow::projective_space();
    let flag = TwistorChow::flag_threefold();
    c.bench_function("blow_up_p3", |b| b.iter(|| blow_up(black_box(&p3)).unwrap()));
    let bp = blow_up(&p3).unwrap();
    let bf = blow_up(&flag).unwrap();
    c.bench_function("equalizer_p3_p3", |b| {
        b.iter(|| build_equalizer(black_box(&bp), black_box(&bp)).unwrap())
    });
    c.bench_function("equalizer_flag_flag", |b| {
        b.iter(|| build_equalizer(black_box(&bf), black_box(&bf)).unwrap())
    });
    let e = build_equalizer(&bf, &bf).unwrap();
    c.bench_function("closure_check_flag_flag", |b| b.iter(|| e.closure_defects()));
}

fn surfaces(c: &mut Criterion) {
    c.bench_function("classify_all_50", |b| b.iter(|| classify_all(black_box(50)).unwrap()));
}

criterion_group!(benches, equalizer, surfaces);
criterion_main!(benches);
