//! Diagonal scans with a geometrically shrinking stride.
//!
//! A pass with stride `h` visits every `h`-th cell of each diagonal and, for
//! each visited cell, computes the longest window with at most `k`
//! mismatches through it using `O(k)` LCE queries. A window of length at
//! least `h` always contains a visited cell, so a pass whose stride does not
//! exceed the optimum finds it. Passes start at the upper bound implied by
//! the exact LCF length and halve the stride until the best length found
//! reaches the current stride.

use crate::lce::LceIndex;
use crate::par;
use crate::text::{MatchSpan, Text, Window};

/// Counters for one run of [`klcf_strided_with_stats`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StridedStats {
    pub passes: usize,
    /// Cells for which the through-cell extension was computed.
    pub visited: u64,
    pub strides: Vec<usize>,
}

/// Mismatch offsets around one cell; reused across the cells of a diagonal.
struct CellScratch {
    fwd: Vec<usize>,
    bwd: Vec<usize>,
}

impl CellScratch {
    fn new(k: usize) -> Self {
        CellScratch {
            fwd: vec![0; k + 1],
            bwd: vec![0; k + 1],
        }
    }
}

fn through_cell(
    text: &Text,
    lce: &LceIndex,
    i1: usize,
    i2: usize,
    k: usize,
    scratch: &mut CellScratch,
) -> Window {
    // fwd[t]: offset of the (t+1)-th mismatch at or after the cell.
    // bwd[t]: distance back to the (t+1)-th mismatch strictly before it.
    // String ends count as mismatches repeated forever.
    let end = (text.n1() - i1).min(text.n2() - i2);
    let mut pos = 0;
    for f in scratch.fwd.iter_mut() {
        if pos >= end {
            *f = end;
            continue;
        }
        *f = (pos + lce.forward(i1 + pos, i2 + pos)).min(end);
        pos = *f + 1;
    }

    let begin = i1.min(i2) + 1;
    let mut dist = 1;
    for b in scratch.bwd.iter_mut() {
        if dist >= begin {
            *b = begin;
            continue;
        }
        *b = (dist + lce.backward(i1 - dist, i2 - dist)).min(begin);
        dist = *b + 1;
    }

    // Absorb `t` mismatches behind the cell and `k - t` at or after it. The
    // window must still contain the cell, so the forward side needs a
    // positive extent. Larger `t` starts earlier, so it is tried first.
    let mut best = Window::new(i1, i2, 0);
    for t in (0..=k).rev() {
        let ahead = scratch.fwd[k - t];
        if ahead == 0 {
            continue;
        }
        let behind = scratch.bwd[t] - 1;
        let len = ahead + behind;
        if len > best.len {
            best = Window::new(i1 - behind, i2 - behind, len);
        }
    }
    best
}

/// Longest window with at most `k` mismatches containing cell `(i1, i2)`
/// (0-based), leftmost on ties. Length 0 when no such window exists, i.e.
/// `k = 0` and the cell itself is a mismatch.
pub fn longest_through_cell(
    text: &Text,
    lce: &LceIndex,
    i1: usize,
    i2: usize,
    k: usize,
) -> MatchSpan {
    assert!(i1 < text.n1() && i2 < text.n2(), "cell out of bounds");
    let k = k.min(text.min_len());
    let w = through_cell(text, lce, i1, i2, k, &mut CellScratch::new(k));
    MatchSpan::from_window(text, w)
}

fn pass(text: &Text, lce: &LceIndex, k: usize, stride: usize) -> (Option<Window>, u64) {
    par::map_reduce(
        0..text.diagonal_count(),
        (None, 0u64),
        |d| {
            let diag = text.diagonal(d);
            let mut scratch = CellScratch::new(k);
            let mut best = None;
            let mut visited = 0;
            let mut off = stride - 1;
            while off < diag.len {
                let w = through_cell(text, lce, diag.start1 + off, diag.start2 + off, k, &mut scratch);
                best = Window::best_opt(best, Some(w));
                visited += 1;
                off += stride;
            }
            (best, visited)
        },
        |(a, x), (b, y)| (Window::best_opt(a, b), x + y),
    )
}

/// One pass at stride `h`: cells at offsets `h - 1, 2h - 1, ...` (0-based)
/// of every diagonal. Returns the best window seen (length 0 if no cell was
/// visited) and the number of visited cells.
pub fn scan_pass(text: &Text, lce: &LceIndex, k: usize, h: usize) -> (MatchSpan, u64) {
    assert!(h >= 1, "stride must be positive");
    let k = k.min(text.min_len());
    let (best, visited) = pass(text, lce, k, h);
    (MatchSpan::from_window(text, best.unwrap_or_default()), visited)
}

/// Exact k-LCF by strided diagonal scanning.
pub fn klcf_strided(text: &Text, lce: &LceIndex, k: usize) -> MatchSpan {
    let ell0 = lce.lcf0().len;
    klcf_strided_with_stats(text, lce, k, ell0).0
}

/// Exact k-LCF by strided diagonal scanning, given the exact LCF length.
pub fn klcf_strided_with_stats(
    text: &Text,
    lce: &LceIndex,
    k: usize,
    ell0: usize,
) -> (MatchSpan, StridedStats) {
    let n = text.min_len();
    let k = k.min(n);
    let mut stats = StridedStats::default();
    if n == 0 || ell0 == 0 {
        return (MatchSpan::from_window(text, Window::new(0, 0, k)), stats);
    }

    let mut stride = ((k + 1) * ell0 + k).min(n);
    loop {
        let (best, visited) = pass(text, lce, k, stride);
        stats.passes += 1;
        stats.visited += visited;
        stats.strides.push(stride);
        let best = best.unwrap_or_default();
        if best.len >= stride || stride == 1 {
            return (MatchSpan::from_window(text, best), stats);
        }
        stride = (stride / 2).max(1);
    }
}
