use bateman_cli::{compare_rows, table_rows, CompareArgs, Exec, RunConfig};
use criterion::{criterion_group, criterion_main, Criterion};
use series_engine::Which;

fn drivers(c: &mut Criterion) {
    let sweep = CompareArgs {
        which: Which::Bateman,
        a: 2.0,
        x_min: 20.0,
        x_max: 160.0,
        n: 16,
    };
    for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        let cfg = RunConfig {
            exec,
            ..RunConfig::default()
        };
        c.bench_function(&format!("table3/{name}"), |b| {
            b.iter(|| table_rows(3, &cfg).unwrap())
        });
        c.bench_function(&format!("compare_k_a2/{name}"), |b| {
            b.iter(|| compare_rows(&sweep, &cfg).unwrap())
        });
    }
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = drivers
}
criterion_main!(benches);
