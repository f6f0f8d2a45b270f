use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use climb_core::analysis::local_optima_census;
use climb_core::landscapes::{make_pairs_instance, WindingLandscape};
use climb_core::reference_rules::verify_cpp_closure;
use climb_core::search::steepest_ascent;
use climb_core::{Execution, TieBreakPolicy};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn census(c: &mut Criterion) {
    let inst = make_pairs_instance(16, 3).unwrap();
    let mut group = c.benchmark_group("census_pairs_16");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| local_optima_census(&inst, 1 << 16, exec).unwrap())
        });
    }
    group.finish();
}

fn closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure_n4");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| verify_cpp_closure(4, exec).unwrap())
        });
    }
    group.finish();
}

fn winding_scaling(c: &mut Criterion) {
    let ns: Vec<usize> = (1..=12).collect();
    let mut group = c.benchmark_group("winding_scaling_1_to_12");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                exec.map_slice(&ns, |&n| {
                    let w = WindingLandscape::semismooth(n);
                    steepest_ascent(&w, &vec![0; 2 * n], TieBreakPolicy::FailOnTie, 1 << (n + 2))
                        .unwrap()
                        .num_steps()
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, census, closure, winding_scaling);
criterion_main!(benches);
