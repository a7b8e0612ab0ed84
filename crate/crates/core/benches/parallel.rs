//! Sequential against rayon execution for the data-parallel entry points.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use inclusion_core::exact::{conjecture_scan, Budget};
use inclusion_core::graph::generate::{random_min_degree, two_tier};
use inclusion_core::greedy::greedy_colour;
use inclusion_core::pipeline::{run_pipeline, PipelineParams, Slack};
use inclusion_core::validator::validate_with;
use inclusion_core::{Execution, Graph};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn bench_validate(c: &mut Criterion) {
    let g = random_min_degree(4000, 20, 0.01, 1).unwrap();
    let colouring = greedy_colour(&g).unwrap();
    let mut group = c.benchmark_group("validate");
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::new(name, g.edge_count()), |b| {
            b.iter(|| black_box(validate_with(&g, &colouring, mode)))
        });
    }
    group.finish();
}

fn bench_scan(c: &mut Criterion) {
    let graphs: Vec<Graph> = (0..200).map(|s| random_min_degree(9, 2, 0.35, s).unwrap()).collect();
    let mut group = c.benchmark_group("conjecture_scan");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::new(name, graphs.len()), |b| {
            b.iter(|| black_box(conjecture_scan(&graphs, Budget::nodes(200_000), mode)))
        });
    }
    group.finish();
}

fn bench_pipeline(c: &mut Criterion) {
    let g = two_tier(300, 1700, 20, 0.5, 0.0006, 1).unwrap();
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    for (name, mode) in MODES {
        let params = PipelineParams {
            tau: Some(100.0),
            f_prob: Some(0.05),
            t: Some(200),
            slack: Slack {
                thin_low: 10.0,
                thin_high: 60.0,
                ..Slack::default()
            },
            execution: mode,
            ..PipelineParams::default()
        };
        group.bench_function(BenchmarkId::new(name, g.n()), |b| {
            b.iter(|| black_box(run_pipeline(&g, &params, 7).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_validate, bench_scan, bench_pipeline);
criterion_main!(benches);
