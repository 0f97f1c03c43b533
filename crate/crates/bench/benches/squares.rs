use criterion::{criterion_group, criterion_main, Criterion};
use nonrep_core::graph::families;
use nonrep_core::repetition::find_square;
use nonrep_core::{find_violating_path, resample_color, ListAssignment, Regime};

fn sequences(c: &mut Criterion) {
    let word: Vec<u8> = (0..512u32).map(|i| (i.count_ones() % 3) as u8).collect();
    c.bench_function("find_square_512", |b| b.iter(|| find_square(&word)));
}

fn graphs(c: &mut Criterion) {
    let g = families::petersen();
    let l = ListAssignment::uniform(&g, 5);
    let run = resample_color(&g, &l, Regime::VertexThue, 0, 100_000).unwrap();
    let coloring = run.coloring().cloned().unwrap_or_default();
    c.bench_function("violating_path_petersen", |b| {
        b.iter(|| find_violating_path(&g, &coloring, Regime::VertexThue, None))
    });
    let p = families::path(100);
    let l = ListAssignment::uniform(&p, 4);
    c.bench_function("resample_P100_k4", |b| {
        b.iter(|| resample_color(&p, &l, Regime::VertexThue, 7, 100_000).unwrap())
    });
}

criterion_group!(benches, sequences, graphs);
criterion_main!(benches);
