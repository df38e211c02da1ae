use super::blocks::MismatchBlocks;
use super::lut::{LutL1, LutL2};

/// Result of [`longest_window_lut`]: bits `[start, start + len)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WindowScan {
    pub start: usize,
    pub len: usize,
    /// Table lookups performed.
    pub lookups: u64,
}

/// Leftmost longest window of the mismatch bits with at most `k` ones.
///
/// Windows inside one block come from L1. A window spanning blocks
/// `i < r` is a suffix of block `i`, the full blocks between them, and a
/// prefix of block `r`; for each interior popcount value only the farthest
/// `r` is queried in L2, since any nearer `r` with the same interior count
/// only adds zero blocks. One monotone pointer per popcount value keeps the
/// work at `O((k + 1) * blocks)`.
pub fn longest_window_lut(blocks: &MismatchBlocks, k: usize, l1: &LutL1, l2: &LutL2) -> WindowScan {
    let b = blocks.block_bits();
    assert!(l1.block_bits() == b && l2.block_bits() == b, "table width mismatch");
    let total = blocks.total_bits();
    let ones = blocks.count_ones();
    if ones <= k {
        return WindowScan {
            start: 0,
            len: total,
            lookups: 0,
        };
    }
    let k = k.min(ones);

    // Pad the tail with ones; the leftmost optimum then overhangs the end only
    // when it is the whole vector, and clamping recovers that case.
    let mut blk: Vec<u32> = blocks.blocks().iter().map(|&x| u32::from(x)).collect();
    let m = blk.len();
    let full = (1u32 << b) - 1;
    let valid = total - (m - 1) * b;
    if valid < b {
        blk[m - 1] |= full & !((1u32 << valid) - 1);
    }
    let mut prefix_ones = Vec::with_capacity(m + 1);
    prefix_ones.push(0usize);
    for &x in &blk {
        prefix_ones.push(prefix_ones.last().unwrap() + x.count_ones() as usize);
    }

    let mut best = (0usize, 0usize);
    let mut consider = |start: usize, len: usize| {
        if len > best.1 || (len == best.1 && start < best.0) {
            best = (start, len);
        }
    };
    let mut lookups = 0u64;

    let l1_budget = k.min(b);
    for (i, &x) in blk.iter().enumerate() {
        let e = l1.get(x, l1_budget);
        lookups += 1;
        consider(i * b + e.start as usize, e.len as usize);
    }

    // reach[p]: farthest right block r with popcount(blocks i+1..r) <= p.
    let mut reach = vec![0usize; k + 1];
    for i in 0..m.saturating_sub(1) {
        let base = prefix_ones[i + 1];
        let mut last = usize::MAX;
        for (p, r) in reach.iter_mut().enumerate() {
            *r = (*r).max(i + 1);
            while *r + 1 < m && prefix_ones[*r + 1] - base <= p {
                *r += 1;
            }
            if *r == last {
                continue;
            }
            last = *r;
            let interior = prefix_ones[*r] - base;
            let e = l2.get(blk[i], blk[*r], (k - interior).min(2 * b));
            lookups += 1;
            consider(
                (i + 1) * b - e.suffix as usize,
                e.suffix as usize + (*r - i - 1) * b + e.prefix as usize,
            );
        }
    }

    let (start, len) = best;
    WindowScan {
        start,
        len: len.min(total - start.min(total)),
        lookups,
    }
}
