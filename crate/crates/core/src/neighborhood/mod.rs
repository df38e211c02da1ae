//! k-LCF by binary search over the answer length with deletion
//! neighborhoods.
//!
//! Two equal-length strings are within Hamming distance `k` iff deleting the
//! same `k` positions from both leaves equal strings. For a candidate length
//! `j`, the keywords of every length-`j` substring of `s1` are sorted into an
//! index and every keyword of every length-`j` substring of `s2` is
//! binary-searched in it. `s1` is processed in `h` overlapping pieces to cap
//! the index size. Keyword comparisons cost `O(k)` LCE queries.

mod index;
mod keyword;

pub use index::{build_index, estimated_words, query_index, KeywordIndex};
pub use keyword::{binomial, enumerate_neighborhood, keyword_order, DeleteTuples, Keyword};

use crate::error::{Error, Result};
use crate::lce::LceIndex;
use crate::oracle::klcf_bounds;
use crate::par;
use crate::text::{MatchSpan, Seq, Text, Window};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeighborhoodConfig {
    /// Number of pieces `s1` is split into; `None` picks
    /// [`default_pieces`].
    pub pieces: Option<usize>,
    /// Memory budget in words, checked before any index is built.
    pub mem_budget: u64,
}

pub const DEFAULT_MEM_BUDGET: u64 = 1 << 28;

impl Default for NeighborhoodConfig {
    fn default() -> Self {
        NeighborhoodConfig {
            pieces: None,
            mem_budget: DEFAULT_MEM_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NeighborhoodStats {
    /// Keywords generated, index and query side combined.
    pub keywords: u64,
    /// Calls of the length predicate, including the final witness search.
    pub evaluations: usize,
    pub pieces: usize,
}

/// `max(1, round(sqrt(n / ((k + 1)(ell0 + 1)))))`, which balances index size
/// against the overlap between pieces.
pub fn default_pieces(n: usize, k: usize, ell0: usize) -> usize {
    let denom = (k as f64 + 1.0) * (ell0 as f64 + 1.0);
    ((n as f64 / denom).sqrt().round() as usize).max(1)
}

/// `k * ((k + 1)(ell0 + 1))^(k + 1/2)`: the index stays within linear space
/// while this is `O(sqrt(n))`.
pub fn space_factor(k: usize, ell0: usize) -> f64 {
    let base = (k as f64 + 1.0) * (ell0 as f64 + 1.0);
    k as f64 * base.powf(k as f64 + 0.5)
}

/// Whether [`klcf_neighborhood_with_stats`] would stay within `cfg.mem_budget`
/// on inputs of these sizes: both the space factor and the largest piece
/// index over every candidate length must fit.
pub fn fits_budget(n1: usize, n2: usize, k: usize, ell0: usize, cfg: &NeighborhoodConfig) -> bool {
    let n = n1.min(n2);
    let k = k.min(n);
    if n == 0 || ell0 == 0 {
        return true;
    }
    let (lower, upper) = klcf_bounds(ell0, k, n1, n2);
    if upper <= k {
        return true;
    }
    if space_factor(k, ell0) > cfg.mem_budget as f64 {
        return false;
    }
    let pieces = cfg.pieces.unwrap_or_else(|| default_pieces(n1.max(n2), k, ell0)).max(1);
    let step = n1.div_ceil(pieces);
    (lower.max(k + 1)..=upper).all(|len| {
        let sources = ((step + len).min(n1) + 1).saturating_sub(len) as u64;
        estimated_words(sources.saturating_mul(binomial(len, k)), k) <= cfg.mem_budget
    })
}

/// Whether the search should stop at the first hit or find the smallest
/// `(start1, start2)`.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    AnyHit,
    Smallest,
}

#[allow(clippy::too_many_arguments)]
fn search(
    text: &Text,
    lce: &LceIndex,
    len: usize,
    k: usize,
    pieces: usize,
    budget: u64,
    mode: Mode,
    stats: &mut NeighborhoodStats,
) -> Result<Option<Window>> {
    stats.evaluations += 1;
    let (n1, n2) = (text.n1(), text.n2());
    if len > n1.min(n2) {
        return Ok(None);
    }
    if len <= k {
        return Ok(Some(Window::new(0, 0, len)));
    }
    let step = n1.div_ceil(pieces);
    let queries = n2 - len + 1;
    let s2_base = text.concat_offset(Seq::Second);
    let mut best: Option<Window> = None;
    for p in 0..pieces {
        let from = p * step;
        if from + len > n1 {
            break;
        }
        let idx = build_index(text, lce, from..from + step + len, len, k, budget)?;
        stats.pieces += 1;
        stats.keywords += idx.len() as u64 + queries as u64 * binomial(len, k);
        match mode {
            Mode::AnyHit => {
                let hit = par::find_any(0..queries, |q| {
                    idx.first_hit_any_tuple(text, lce, s2_base + q)
                        .map(|i1| Window::new(i1, q, len))
                });
                if hit.is_some() {
                    return Ok(hit);
                }
            }
            Mode::Smallest => {
                let found = par::map_reduce(
                    0..queries,
                    None,
                    |q| {
                        idx.lookup_any_tuple(text, lce, s2_base + q)
                            .map(|i1| Window::new(i1, q, len))
                    },
                    Window::best_opt,
                );
                best = Window::best_opt(best, found);
            }
        }
    }
    Ok(best)
}

/// A length-`len` common substring with at most `k` mismatches, if one
/// exists; the one with the smallest `(start1, start2)` is returned.
///
/// `s1` is cut into `pieces` pieces of length `ceil(n1 / pieces) + len`,
/// consecutive pieces overlapping by `len`.
pub fn exists_match_of_length(
    text: &Text,
    lce: &LceIndex,
    len: usize,
    k: usize,
    pieces: usize,
    mem_budget: u64,
) -> Result<Option<MatchSpan>> {
    if len == 0 || pieces == 0 {
        return Err(Error::InvalidParameter(
            "length and piece count must be positive".into(),
        ));
    }
    let mut stats = NeighborhoodStats::default();
    let hit = search(text, lce, len, k, pieces, mem_budget, Mode::Smallest, &mut stats)?;
    Ok(hit.map(|w| MatchSpan::from_window(text, w)))
}

/// Exact k-LCF by neighborhood indexing.
pub fn klcf_neighborhood(
    text: &Text,
    lce: &LceIndex,
    k: usize,
    cfg: &NeighborhoodConfig,
) -> Result<MatchSpan> {
    let ell0 = lce.lcf0().len;
    klcf_neighborhood_with_stats(text, lce, k, ell0, cfg).map(|(m, _)| m)
}

/// Exact k-LCF by neighborhood indexing, given the exact LCF length.
///
/// Binary-searches the smallest length with no match over
/// `[lower + 1, upper + 1]` from [`klcf_bounds`]; the answer is one less.
pub fn klcf_neighborhood_with_stats(
    text: &Text,
    lce: &LceIndex,
    k: usize,
    ell0: usize,
    cfg: &NeighborhoodConfig,
) -> Result<(MatchSpan, NeighborhoodStats)> {
    let n = text.min_len();
    let k = k.min(n);
    let mut stats = NeighborhoodStats::default();
    let trivial = |len| Ok((MatchSpan::from_window(text, Window::new(0, 0, len)), NeighborhoodStats::default()));
    if n == 0 || ell0 == 0 {
        return trivial(k);
    }
    let (lower, upper) = klcf_bounds(ell0, k, text.n1(), text.n2());
    if upper <= k {
        return trivial(upper);
    }

    let factor = space_factor(k, ell0);
    if factor > cfg.mem_budget as f64 {
        return Err(Error::Resource {
            what: "neighborhood space factor (words)",
            needed: factor.min(u64::MAX as f64) as u64,
            budget: cfg.mem_budget,
        });
    }
    let pieces = cfg
        .pieces
        .unwrap_or_else(|| default_pieces(text.n1().max(text.n2()), k, ell0))
        .max(1);

    let (mut found, mut missing) = (lower, upper + 1);
    while missing - found > 1 {
        let mid = found + (missing - found) / 2;
        let hit = search(text, lce, mid, k, pieces, cfg.mem_budget, Mode::AnyHit, &mut stats)?;
        if hit.is_some() {
            found = mid;
        } else {
            missing = mid;
        }
    }
    let witness = search(text, lce, found, k, pieces, cfg.mem_budget, Mode::Smallest, &mut stats)?
        .expect("a match of the lower-bound length exists");
    Ok((MatchSpan::from_window(text, witness), stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lce::build_lce;
    use crate::oracle::klcf_oracle;

    #[test]
    fn length_predicate() {
        let t = Text::from_bytes(b"abba", b"aaba");
        let lce = build_lce(&t);
        let m = exists_match_of_length(&t, &lce, 4, 1, 1, u64::MAX).unwrap().unwrap();
        assert_eq!((m.len, m.pos1(), m.pos2()), (4, 1, 1));
        assert_eq!(exists_match_of_length(&t, &lce, 5, 1, 1, u64::MAX), Ok(None));
        assert!(exists_match_of_length(&t, &lce, 2, 1, 2, u64::MAX).unwrap().is_some());
        assert!(exists_match_of_length(&t, &lce, 0, 1, 2, u64::MAX).is_err());
    }

    #[test]
    fn piece_count_does_not_change_the_answer() {
        let t = Text::from_bytes(b"abaabbabbbaabaababba", b"bbabaabaaabbaabab");
        let lce = build_lce(&t);
        for k in 0..3 {
            for len in 1..12 {
                let one = exists_match_of_length(&t, &lce, len, k, 1, u64::MAX).unwrap();
                for h in 2..8 {
                    assert_eq!(exists_match_of_length(&t, &lce, len, k, h, u64::MAX).unwrap(), one);
                }
            }
        }
    }

    #[test]
    fn solver_examples() {
        let cfg = NeighborhoodConfig::default();
        let t = Text::from_bytes(b"abba", b"aaba");
        let lce = build_lce(&t);
        assert_eq!(klcf_neighborhood(&t, &lce, 1, &cfg).unwrap().len, 4);

        let t = Text::from_bytes(b"abcabd", b"abcabd");
        let lce = build_lce(&t);
        assert_eq!(klcf_neighborhood(&t, &lce, 0, &cfg).unwrap().len, 6);

        for (a, b) in [(&b"xab"[..], &b"aby"[..]), (b"aaaa", b"bbbb"), (b"abcab", b""), (b"abcbca", b"cbab")] {
            let t = Text::from_bytes(a, b);
            let lce = build_lce(&t);
            for k in 0..4 {
                assert_eq!(klcf_neighborhood(&t, &lce, k, &cfg).unwrap(), klcf_oracle(&t, k), "{a:?} {b:?} {k}");
            }
        }
    }

    #[test]
    fn guard() {
        let t = Text::from_bytes(b"abcdabcdab", b"abcdxbcdab");
        let lce = build_lce(&t);
        let tight = NeighborhoodConfig { pieces: None, mem_budget: 10 };
        assert!(matches!(klcf_neighborhood(&t, &lce, 2, &tight), Err(Error::Resource { .. })));
        assert!((space_factor(1, 2) - 6f64.powf(1.5)).abs() < 1e-9);
        assert_eq!(default_pieces(100, 0, 0), 10);
    }

    #[test]
    fn fits_budget_implies_success() {
        let t = Text::from_bytes(b"abcdabcdabbacdabcaab", b"abcdxbcdabbcadcabbaa");
        let lce = build_lce(&t);
        let ell0 = lce.lcf0().len;
        for budget in [10u64, 100, 1_000, 10_000, 100_000] {
            for k in 0..4 {
                let cfg = NeighborhoodConfig { pieces: None, mem_budget: budget };
                if fits_budget(t.n1(), t.n2(), k, ell0, &cfg) {
                    assert!(klcf_neighborhood(&t, &lce, k, &cfg).is_ok(), "budget {budget} k {k}");
                }
            }
        }
        assert!(fits_budget(t.n1(), t.n2(), 1, ell0, &NeighborhoodConfig::default()));
        assert!(!fits_budget(t.n1(), t.n2(), 3, ell0, &NeighborhoodConfig { pieces: None, mem_budget: 10 }));
    }
}
