//! k-LCF over word-packed mismatch vectors.
//!
//! For every diagonal, the two sequences are compared a packed word at a
//! time, the per-symbol mismatch flags are gathered into `b`-bit blocks, and
//! the longest window with at most `k` set bits is found with two lookup
//! tables: L1 for windows inside one block, L2 for windows spanning a suffix
//! of one block and a prefix of a later one.
//!
//! The remapped variant cuts both sequences into overlapping chunks just long
//! enough to contain any optimal window and re-densifies the alphabet of each
//! chunk pair, shrinking the packed symbol width when few symbols occur
//! locally.

mod blocks;
mod lut;
mod pack;
mod window;

pub use blocks::{build_mismatch_blocks, MismatchBlocks};
pub use lut::{build_l1, build_l2, l2_entries, L1Entry, L2Entry, LutL1, LutL2, MAX_BLOCK_BITS, MAX_L2_ENTRIES};
pub use pack::{bits_per_symbol, mismatch_word, pack, BitGather, FieldMasks, PackedText, WORD_BITS};
pub use window::{longest_window_lut, WindowScan};

use crate::error::Result;
use crate::par;
use crate::text::{MatchSpan, Text, Window};

pub const DEFAULT_BLOCK_BITS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TabulationConfig {
    pub block_bits: usize,
}

impl Default for TabulationConfig {
    fn default() -> Self {
        TabulationConfig {
            block_bits: DEFAULT_BLOCK_BITS,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TabulationStats {
    pub diagonals: u64,
    /// Total L1 + L2 lookups.
    pub lookups: u64,
    pub max_lookups_per_diagonal: u64,
    /// Chunk pairs scanned (remapped variant only).
    pub chunk_pairs: u64,
}

impl TabulationStats {
    fn merge(self, o: TabulationStats) -> TabulationStats {
        TabulationStats {
            diagonals: self.diagonals + o.diagonals,
            lookups: self.lookups + o.lookups,
            max_lookups_per_diagonal: self.max_lookups_per_diagonal.max(o.max_lookups_per_diagonal),
            chunk_pairs: self.chunk_pairs + o.chunk_pairs,
        }
    }
}

/// Both lookup tables for one block width, reusable across inputs.
#[derive(Debug, Clone)]
pub struct Tabulator {
    l1: LutL1,
    l2: LutL2,
}

type Scan = (Option<Window>, TabulationStats);

fn merge_scans(a: Scan, b: Scan) -> Scan {
    (Window::best_opt(a.0, b.0), a.1.merge(b.1))
}

impl Tabulator {
    pub fn new(block_bits: usize) -> Result<Self> {
        Ok(Tabulator {
            l1: build_l1(block_bits)?,
            l2: build_l2(block_bits)?,
        })
    }

    pub fn block_bits(&self) -> usize {
        self.l1.block_bits()
    }

    pub fn l1(&self) -> &LutL1 {
        &self.l1
    }

    pub fn l2(&self) -> &LutL2 {
        &self.l2
    }

    fn scan_diagonal(&self, text: &Text, packed: &PackedText, gather: &BitGather, d: usize, k: usize) -> Scan {
        let diag = text.diagonal(d);
        let blocks = blocks::build_with(packed, gather, diag, self.block_bits());
        let w = longest_window_lut(&blocks, k, &self.l1, &self.l2);
        let stats = TabulationStats {
            diagonals: 1,
            lookups: w.lookups,
            max_lookups_per_diagonal: w.lookups,
            chunk_pairs: 0,
        };
        let found = Window::new(diag.start1 + w.start, diag.start2 + w.start, w.len);
        (Some(found), stats)
    }

    fn scan(&self, text: &Text, k: usize) -> Scan {
        let packed = pack(text);
        let gather = BitGather::new(packed.masks().high);
        par::map_reduce(
            0..text.diagonal_count(),
            (None, TabulationStats::default()),
            |d| self.scan_diagonal(text, &packed, &gather, d, k),
            merge_scans,
        )
    }

    /// Exact k-LCF over all diagonals.
    pub fn solve(&self, text: &Text, k: usize) -> (MatchSpan, TabulationStats) {
        let k = k.min(text.min_len());
        let (best, stats) = self.scan(text, k);
        (MatchSpan::from_window(text, best.unwrap_or_default()), stats)
    }

    /// Exact k-LCF over overlapping chunk pairs with per-pair alphabets.
    ///
    /// With `span = (k + 1) * ell0 + k`, chunks have length `2 * span - 1`
    /// and overlap by `span`, so every window of length at most `span`, and
    /// hence every optimal one, lies inside some chunk pair.
    pub fn solve_remapped(&self, text: &Text, k: usize, ell0: usize) -> (MatchSpan, TabulationStats) {
        let n = text.min_len();
        let k = k.min(n);
        if n == 0 || ell0 == 0 {
            return (MatchSpan::from_window(text, Window::new(0, 0, k)), TabulationStats::default());
        }
        let span = (k + 1) * ell0 + k;
        let chunks1 = chunk_starts(text.n1(), span);
        let chunks2 = chunk_starts(text.n2(), span);
        let pairs = chunks1.len() * chunks2.len();
        let (best, mut stats) = par::map_reduce(
            0..pairs,
            (None, TabulationStats::default()),
            |p| {
                let (a, b) = (&chunks1[p / chunks2.len()], &chunks2[p % chunks2.len()]);
                let local = Text::from_symbols(&text.s1()[a.clone()], &text.s2()[b.clone()]);
                let (w, mut st) = self.scan(&local, k);
                st.chunk_pairs = 1;
                let w = w.map(|w| Window::new(w.start1 + a.start, w.start2 + b.start, w.len));
                (w, st)
            },
            merge_scans,
        );
        stats.chunk_pairs = pairs as u64;
        (MatchSpan::from_window(text, best.unwrap_or_default()), stats)
    }
}

/// Chunks `[s, min(s + 2 * span - 1, n))` at starts `0, span - 1, ...`
/// (step at least 1), stopping once a chunk reaches the end.
fn chunk_starts(n: usize, span: usize) -> Vec<std::ops::Range<usize>> {
    let len = (2 * span).saturating_sub(1).max(1);
    let step = span.saturating_sub(1).max(1);
    let mut out = Vec::new();
    let mut s = 0;
    while s < n {
        out.push(s..(s + len).min(n));
        if s + len >= n {
            break;
        }
        s += step;
    }
    out
}

pub fn klcf_tabulation(text: &Text, k: usize, cfg: &TabulationConfig) -> Result<MatchSpan> {
    Ok(Tabulator::new(cfg.block_bits)?.solve(text, k).0)
}

pub fn klcf_tabulation_remapped(
    text: &Text,
    k: usize,
    ell0: usize,
    cfg: &TabulationConfig,
) -> Result<MatchSpan> {
    Ok(Tabulator::new(cfg.block_bits)?.solve_remapped(text, k, ell0).0)
}
