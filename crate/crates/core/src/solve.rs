//! Uniform entry point over all solvers.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::lce::{build_lce, LceIndex};
use crate::neighborhood::{klcf_neighborhood_with_stats, NeighborhoodConfig};
use crate::oracle::klcf_oracle_par;
use crate::strided::klcf_strided_with_stats;
use crate::tabulation::{TabulationConfig, Tabulator};
use crate::text::{MatchSpan, Text};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Naive,
    Neighborhood,
    Strided,
    Tabulation,
    TabulationRemap,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Naive,
        Algorithm::Neighborhood,
        Algorithm::Strided,
        Algorithm::Tabulation,
        Algorithm::TabulationRemap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Neighborhood => "neighborhood",
            Algorithm::Strided => "strided",
            Algorithm::Tabulation => "tabulation",
            Algorithm::TabulationRemap => "tabulation-remap",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SolveConfig {
    pub neighborhood: NeighborhoodConfig,
    pub tabulation: TabulationConfig,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub span: MatchSpan,
    pub ell0: usize,
    pub algorithm: Algorithm,
    /// Algorithm-specific work: cells for naive, visited cells for strided,
    /// keywords for neighborhood, table lookups for the tabulation variants.
    pub work: u64,
}

/// Runs any algorithm on prebuilt inputs; lookup tables are built on first
/// use and kept.
#[derive(Debug, Default)]
pub struct Solver {
    cfg: SolveConfig,
    tabulator: OnceLock<Result<Tabulator>>,
}

impl Solver {
    pub fn new(cfg: SolveConfig) -> Self {
        Solver {
            cfg,
            tabulator: OnceLock::new(),
        }
    }

    pub fn config(&self) -> &SolveConfig {
        &self.cfg
    }

    pub fn tabulator(&self) -> Result<&Tabulator> {
        self.tabulator
            .get_or_init(|| Tabulator::new(self.cfg.tabulation.block_bits))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `ell0` must be the exact LCF length of `text` (e.g. `lce.lcf0().len`).
    pub fn run(&self, text: &Text, lce: &LceIndex, ell0: usize, k: usize, algorithm: Algorithm) -> Result<Solution> {
        let (span, work) = match algorithm {
            Algorithm::Naive => (klcf_oracle_par(text, k), (text.n1() * text.n2()) as u64),
            Algorithm::Neighborhood => {
                let (span, stats) = klcf_neighborhood_with_stats(text, lce, k, ell0, &self.cfg.neighborhood)?;
                (span, stats.keywords)
            }
            Algorithm::Strided => {
                let (span, stats) = klcf_strided_with_stats(text, lce, k, ell0);
                (span, stats.visited)
            }
            Algorithm::Tabulation => {
                let (span, stats) = self.tabulator()?.solve(text, k);
                (span, stats.lookups)
            }
            Algorithm::TabulationRemap => {
                let (span, stats) = self.tabulator()?.solve_remapped(text, k, ell0);
                (span, stats.lookups)
            }
        };
        Ok(Solution {
            span,
            ell0,
            algorithm,
            work,
        })
    }
}

pub fn solve_with_index(
    text: &Text,
    lce: &LceIndex,
    k: usize,
    algorithm: Algorithm,
    cfg: &SolveConfig,
) -> Result<Solution> {
    Solver::new(*cfg).run(text, lce, lce.lcf0().len, k, algorithm)
}

/// Builds the LCE index and runs one algorithm.
pub fn solve(text: &Text, k: usize, algorithm: Algorithm, cfg: &SolveConfig) -> Result<Solution> {
    solve_with_index(text, &build_lce(text), k, algorithm, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>(), Ok(a));
        }
        assert!("auto".parse::<Algorithm>().is_err());
    }

    #[test]
    fn all_algorithms_agree_on_abba() {
        let t = Text::from_bytes(b"abba", b"aaba");
        for a in Algorithm::ALL {
            let s = solve(&t, 1, a, &SolveConfig::default()).unwrap();
            assert_eq!((s.span.len, s.span.pos1(), s.span.pos2(), s.ell0), (4, 1, 1, 2), "{a}");
        }
    }

    #[test]
    fn bad_block_width_surfaces_only_for_tabulation() {
        let cfg = SolveConfig {
            tabulation: TabulationConfig { block_bits: 12 },
            ..Default::default()
        };
        let t = Text::from_bytes(b"abba", b"aaba");
        assert!(solve(&t, 1, Algorithm::Strided, &cfg).is_ok());
        assert!(matches!(solve(&t, 1, Algorithm::Tabulation, &cfg), Err(Error::Resource { .. })));
    }
}
