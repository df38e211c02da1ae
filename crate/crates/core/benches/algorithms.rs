//! Parallel versus sequential timings for every solver.
//!
//! With the `parallel` feature each benchmark runs once on the global rayon
//! pool and once inside a single-thread pool; without it only the sequential
//! variant exists. `cargo bench -p klcf-core --no-default-features` gives the
//! build with no rayon at all.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use klcf::gen::random_instance;
use klcf::{build_lce, Algorithm, LceIndex, SolveConfig, Solver, Text};

struct Case {
    name: &'static str,
    text: Text,
    lce: LceIndex,
    ell0: usize,
    k: usize,
    algos: &'static [Algorithm],
}

fn case(name: &'static str, n: usize, sigma: u32, k: usize, algos: &'static [Algorithm]) -> Case {
    let text = random_instance(n, sigma, 42).expect("valid parameters").text();
    let lce = build_lce(&text);
    let ell0 = lce.lcf0().len;
    Case {
        name,
        text,
        lce,
        ell0,
        k,
        algos,
    }
}

struct Mode {
    name: &'static str,
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
}

impl Mode {
    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            return pool.install(f);
        }
        f()
    }
}

#[cfg(feature = "parallel")]
fn modes() -> Vec<Mode> {
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("thread pool");
    vec![
        Mode {
            name: "parallel",
            pool: None,
        },
        Mode {
            name: "sequential",
            pool: Some(single),
        },
    ]
}

#[cfg(not(feature = "parallel"))]
fn modes() -> Vec<Mode> {
    vec![Mode { name: "sequential" }]
}

fn solvers(c: &mut Criterion) {
    use Algorithm::*;
    let cases = [
        case("dna-2k", 2048, 4, 4, &[Naive, Strided, Tabulation, TabulationRemap]),
        case("protein-2k", 2048, 20, 2, &[Neighborhood, Strided, Tabulation, TabulationRemap]),
        case("bytes-1k", 1024, 128, 1, &[Neighborhood, Strided, Tabulation]),
    ];
    let solver = Solver::new(SolveConfig::default());
    solver.tabulator().expect("default tables");
    let modes = modes();

    for cs in &cases {
        let mut group = c.benchmark_group(cs.name);
        group.sample_size(10).measurement_time(Duration::from_secs(3));
        for &algo in cs.algos {
            for mode in &modes {
                group.bench_function(BenchmarkId::new(algo.name(), mode.name), |b| {
                    b.iter(|| {
                        let sol = mode.run(|| solver.run(&cs.text, &cs.lce, cs.ell0, cs.k, algo));
                        black_box(sol.expect("solvable").span.len)
                    })
                });
            }
        }
        group.finish();
    }
}

fn lce_build(c: &mut Criterion) {
    let text = random_instance(1 << 14, 4, 7).expect("valid parameters").text();
    c.bench_function("lce/build-16k", |b| b.iter(|| black_box(build_lce(&text).concat_len())));
}

criterion_group!(benches, solvers, lce_build);
criterion_main!(benches);
