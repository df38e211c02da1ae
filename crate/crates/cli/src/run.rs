use std::time::Instant;

use klcf::neighborhood::NeighborhoodConfig;
use klcf::tabulation::TabulationConfig;
use klcf::{build_lce, Algorithm, SolveConfig, Solver, Text};
use serde::{Deserialize, Serialize};

use crate::args::{OutputFormat, RunArgs};
use crate::error::{CliError, Result};
use crate::input::load_inputs;
use crate::select::select_algorithm;

/// Result of one run. Positions are 1-based; mismatch offsets are 0-based
/// within the match.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub length: usize,
    pub pos1: usize,
    pub pos2: usize,
    pub mismatches: Vec<usize>,
    pub ell0: usize,
    pub algo: String,
    pub time_ms: f64,
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        let offsets = self.mismatches.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match format {
            OutputFormat::Json => serde_json::to_string(self).expect("report serializes"),
            OutputFormat::Tsv => format!(
                "length\tpos1\tpos2\tmismatches\tell0\talgo\ttime_ms\n{}\t{}\t{}\t{}\t{}\t{}\t{:.3}",
                self.length, self.pos1, self.pos2, offsets, self.ell0, self.algo, self.time_ms
            ),
            OutputFormat::Text => format!(
                "length={} pos1={} pos2={} mismatches=[{}] ell0={} algo={} time_ms={:.3}",
                self.length, self.pos1, self.pos2, offsets, self.ell0, self.algo, self.time_ms
            ),
        }
    }
}

pub fn solve_config(args: &RunArgs) -> SolveConfig {
    SolveConfig {
        neighborhood: NeighborhoodConfig {
            pieces: args.pieces,
            mem_budget: args.mem_budget,
        },
        tabulation: TabulationConfig {
            block_bits: args.block_bits,
        },
    }
}

/// Solves one loaded instance; the timing covers index construction,
/// algorithm selection and the solve itself.
pub fn run_text(text: &Text, args: &RunArgs) -> Result<Report> {
    let k = args.k.ok_or_else(|| CliError::Usage("--k is required".into()))?;
    let cfg = solve_config(args);
    let start = Instant::now();
    let lce = build_lce(text);
    let ell0 = lce.lcf0().len;
    let algo: Algorithm = args
        .algo
        .concrete()
        .unwrap_or_else(|| select_algorithm(text.n1(), text.n2(), ell0, k, &cfg.neighborhood));
    let solution = Solver::new(cfg).run(text, &lce, ell0, k, algo)?;
    let time_ms = start.elapsed().as_secs_f64() * 1e3;
    let span = solution.span;
    Ok(Report {
        length: span.len,
        pos1: span.pos1(),
        pos2: span.pos2(),
        mismatches: span.mismatches,
        ell0,
        algo: algo.name().to_owned(),
        time_ms,
    })
}

pub fn run(args: &RunArgs) -> Result<Report> {
    let (Some(f1), Some(f2)) = (&args.file1, &args.file2) else {
        return Err(CliError::Usage("two input files are required".into()));
    };
    let text = load_inputs(f1, f2, args.format)?;
    run_text(&text, args)
}
