use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use symbis::engine::{minimize, oracle_check, MinimizeOptions, OracleOptions};
use symbis::opennet::{bundled, NetInstance};
use symbis_bench::{pi_tau, swc_gamma, token_chain};

fn examples(c: &mut Criterion) {
    let opts = MinimizeOptions::default();
    let swc = swc_gamma();
    let swc_seeds: Vec<_> = swc.states.iter().map(|(_, s)| s.clone()).collect();
    c.bench_function("minimize/swc", |b| {
        b.iter(|| minimize(&swc.instance, &swc_seeds, &opts).unwrap())
    });

    let nets = bundled();
    let net_seeds = vec![
        nets.get("a").unwrap().clone(),
        nets.get("l").unwrap().clone(),
    ];
    c.bench_function("minimize/nets", |b| {
        b.iter(|| minimize(&NetInstance, &net_seeds, &opts).unwrap())
    });

    let pi = pi_tau();
    let pi_seeds: Vec<_> = pi.states.iter().map(|(_, s)| s.clone()).collect();
    c.bench_function("minimize/pi", |b| {
        b.iter(|| minimize(&pi.instance, &pi_seeds, &opts).unwrap())
    });
    c.bench_function("oracle/pi", |b| {
        b.iter(|| oracle_check(&pi.instance, &pi_seeds, &OracleOptions::default()).unwrap())
    });
}

fn chains(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimize/chain");
    for n in [4, 16, 64] {
        let seeds = vec![token_chain(n)];
        group.bench_with_input(BenchmarkId::from_parameter(n), &seeds, |b, seeds| {
            b.iter(|| minimize(&NetInstance, seeds, &MinimizeOptions::default()).unwrap())
        });
        let parallel = MinimizeOptions {
            parallel: true,
            ..MinimizeOptions::default()
        };
        group.bench_with_input(BenchmarkId::new("parallel", n), &seeds, |b, seeds| {
            b.iter(|| minimize(&NetInstance, seeds, &parallel).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, examples, chains);
criterion_main!(benches);
