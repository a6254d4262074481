// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Benchmarks contrasting the full-space oracle with the subspace
//! engines, plus the two hot primitives (dissipator application and
//! concurrence).

use commonbath::concurrence::{concurrence, concurrence_single_excitation_block, TwoQubitDensity};
use commonbath::e2;
use commonbath::hilbert::{apply_dissipator, build_basis_state, QubitIndexSet};
use commonbath::oracle::{evolve_full, EvolutionConfig};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn projector(n: u32, excited: &[u32]) -> commonbath::DenseOperator {
    build_basis_state(&QubitIndexSet::new(n, excited).unwrap())
        .unwrap()
        .density()
        .unwrap()
}

fn bench_dissipator(c: &mut Criterion) {
    let mut group = c.benchmark_group("dissipator_apply");
    for n in [4u32, 6, 8] {
        let rho = projector(n, &[1, 2]);
        group.bench_with_input(BenchmarkId::from_parameter(n), &rho, |b, rho| {
            b.iter(|| black_box(apply_dissipator(black_box(rho)).unwrap()));
        });
    }
    group.finish();
}

fn bench_evolution_paths(c: &mut Criterion) {
    let mut group = c.benchmark_group("evolution_to_t1");
    group.sample_size(10);
    for n in [4u32, 6] {
        let rho0 = projector(n, &[1, 2]);
        group.bench_with_input(BenchmarkId::new("oracle_rk4", n), &rho0, |b, rho0| {
            let config = EvolutionConfig::defaults(rho0.n(), 1.0);
            b.iter(|| black_box(evolve_full(black_box(rho0), &config).unwrap()));
        });
        group.bench_with_input(BenchmarkId::new("subspace_closed_form", n), &n, |b, &n| {
            b.iter(|| black_box(e2::closed_form_b(black_box(n), 1.0).unwrap()));
        });
    }
    group.finish();
}

fn bench_concurrence(c: &mut Criterion) {
    let rho = TwoQubitDensity::from_block(0.4, 0.25, 0.3, -0.2).unwrap();
    c.bench_function("wootters_general", |b| {
        b.iter(|| black_box(concurrence(black_box(&rho)).unwrap()));
    });
    c.bench_function("wootters_block_fast_path", |b| {
        b.iter(|| {
            black_box(
                concurrence_single_excitation_block(
                    black_box(0.4),
                    black_box(0.25),
                    black_box(0.3),
                    black_box(-0.2),
                )
                .unwrap(),
            )
        });
    });
}

criterion_group!(
    benches,
    bench_dissipator,
    bench_evolution_paths,
    bench_concurrence
);
criterion_main!(benches);
