use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use selberg_numeric::{jackson_sum_with, mc_integrate_with, quad_integrate_with, DensitySpec, Exec};

fn executors() -> [(&'static str, Exec); 2] {
    [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)]
}

fn quad(c: &mut Criterion) {
    let spec = DensitySpec::Selberg { n: 3, alpha: 0.6, beta: 1.3, gamma: 0.4 };
    let mut g = c.benchmark_group("quad_selberg_n3");
    g.sample_size(10);
    for (name, exec) in executors() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| quad_integrate_with(exec, &spec, 1e-8).unwrap())
        });
    }
    g.finish();
}

fn mc(c: &mut Criterion) {
    let spec = DensitySpec::Selberg { n: 4, alpha: 2.0, beta: 2.0, gamma: 1.0 };
    let mut g = c.benchmark_group("mc_selberg_n4");
    g.sample_size(10);
    for (name, exec) in executors() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| mc_integrate_with(exec, &spec, 500_000, 7).unwrap())
        });
    }
    g.finish();
}

fn jackson(c: &mut Criterion) {
    let mut g = c.benchmark_group("jackson_n2_q0.95");
    g.sample_size(10);
    for (name, exec) in executors() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| jackson_sum_with(exec, 2, 1.0, 1.0, 1, 0.95, 1e-14).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, quad, mc, jackson);
criterion_main!(benches);
