use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use klcf::gen::random_instance;
use klcf::{build_lce, Algorithm, SolveConfig, Solver};

use crate::args::BenchArgs;
use crate::error::{CliError, Result};

pub const HEADER: &str = "n\tsigma\tk\talgo\tell0\tellk\ttime_ms\twork\tagree";

/// Comma-separated list; the empty string is the empty list.
pub fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|e| CliError::Usage(format!("{what}: {t:?}: {e}"))))
        .collect()
}

struct Row {
    algo: Algorithm,
    ellk: Option<usize>,
    time_ms: f64,
    work: Option<u64>,
}

/// One random instance per `(n, sigma)` pair; every `k` and algorithm runs
/// `repeats` times on it. `agree` is `yes` when every successful run on the
/// same `(n, sigma, k)` cell found the same length. Runs refused by a
/// resource guard print `NA`.
pub fn bench(args: &BenchArgs, out: &mut impl Write) -> Result<()> {
    let ns: Vec<usize> = parse_list(&args.n_list, "--n-list")?;
    let sigmas: Vec<u32> = parse_list(&args.sigma_list, "--sigma-list")?;
    let ks: Vec<usize> = parse_list(&args.k_list, "--k-list")?;
    let algos: Vec<Algorithm> = parse_list(&args.algos, "--algos")?;
    let solver = Solver::new(SolveConfig::default());
    if algos.iter().any(|a| matches!(a, Algorithm::Tabulation | Algorithm::TabulationRemap)) {
        // build the tables up front so the first timed run does not pay for them
        solver.tabulator()?;
    }
    let io = |e| CliError::Write {
        path: "<stdout>".into(),
        source: e,
    };

    writeln!(out, "{HEADER}").map_err(io)?;
    for (ni, &n) in ns.iter().enumerate() {
        for (si, &sigma) in sigmas.iter().enumerate() {
            let seed = args.seed.wrapping_add((ni * sigmas.len() + si) as u64);
            let text = random_instance(n, sigma, seed)?.text();
            let lce = build_lce(&text);
            let ell0 = lce.lcf0().len;
            for &k in &ks {
                let mut rows = Vec::new();
                for _ in 0..args.repeats {
                    for &algo in &algos {
                        let start = Instant::now();
                        let row = match solver.run(&text, &lce, ell0, k, algo) {
                            Ok(s) => Row {
                                algo,
                                ellk: Some(s.span.len),
                                time_ms: start.elapsed().as_secs_f64() * 1e3,
                                work: Some(s.work),
                            },
                            Err(klcf::Error::Resource { .. }) => Row {
                                algo,
                                ellk: None,
                                time_ms: start.elapsed().as_secs_f64() * 1e3,
                                work: None,
                            },
                            Err(e) => return Err(e.into()),
                        };
                        rows.push(row);
                    }
                }
                let mut lengths = rows.iter().filter_map(|r| r.ellk);
                let first = lengths.next();
                let agree = if lengths.all(|l| Some(l) == first) { "yes" } else { "no" };
                for r in rows {
                    let na = |v: Option<String>| v.unwrap_or_else(|| "NA".into());
                    writeln!(
                        out,
                        "{n}\t{sigma}\t{k}\t{}\t{ell0}\t{}\t{:.3}\t{}\t{agree}",
                        r.algo,
                        na(r.ellk.map(|v| v.to_string())),
                        r.time_ms,
                        na(r.work.map(|v| v.to_string())),
                    )
                    .map_err(io)?;
                }
            }
        }
    }
    Ok(())
}
