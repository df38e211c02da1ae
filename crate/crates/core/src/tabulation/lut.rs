//! Lookup tables for the longest window with a bounded number of set bits.
//!
//! Bit `r` of a `b`-bit block (least significant first) is position `r + 1`
//! of the block read left to right.

use crate::error::{Error, Result};

pub const MAX_BLOCK_BITS: usize = 16;
/// Largest L2 table accepted, in entries.
pub const MAX_L2_ENTRIES: u64 = 1 << 26;

/// Longest window inside one block: `[start, start + len)` (0-based) holding
/// `ones` set bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct L1Entry {
    pub start: u8,
    pub len: u8,
    pub ones: u8,
}

impl L1Entry {
    /// `(i, j, k'')` with `i..=j` the 1-based window; `j = i - 1` when empty.
    pub fn one_based(&self) -> (usize, usize, usize) {
        let i = self.start as usize + 1;
        (i, i + self.len as usize - 1, self.ones as usize)
    }

    fn encode(self) -> u16 {
        u16::from(self.start) | u16::from(self.len) << 5 | u16::from(self.ones) << 10
    }

    fn decode(v: u16) -> Self {
        L1Entry {
            start: (v & 31) as u8,
            len: (v >> 5 & 31) as u8,
            ones: (v >> 10 & 31) as u8,
        }
    }
}

/// Longest window made of a suffix of the first block followed by a prefix
/// of the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct L2Entry {
    pub suffix: u8,
    pub prefix: u8,
    pub ones: u8,
}

impl L2Entry {
    /// `(i, j, k'')` over the 1-based concatenation of both blocks.
    pub fn one_based(&self, b: usize) -> (usize, usize, usize) {
        (
            b + 1 - self.suffix as usize,
            b + self.prefix as usize,
            self.ones as usize,
        )
    }

    pub fn len(&self) -> usize {
        self.suffix as usize + self.prefix as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn encode(self) -> u16 {
        u16::from(self.suffix) | u16::from(self.prefix) << 5 | u16::from(self.ones) << 10
    }

    fn decode(v: u16) -> Self {
        L2Entry {
            suffix: (v & 31) as u8,
            prefix: (v >> 5 & 31) as u8,
            ones: (v >> 10 & 63) as u8,
        }
    }
}

fn check_block_bits(b: usize) -> Result<()> {
    if (1..=MAX_BLOCK_BITS).contains(&b) {
        Ok(())
    } else {
        Err(Error::Resource {
            what: "lookup table block width in bits",
            needed: b as u64,
            budget: MAX_BLOCK_BITS as u64,
        })
    }
}

/// Leftmost longest window of `bits` (width `b`) with at most `budget` ones.
fn best_window(bits: u32, b: usize, budget: usize) -> L1Entry {
    let (mut left, mut ones) = (0, 0);
    let (mut best_start, mut best_len) = (0, 0);
    for right in 0..b {
        ones += (bits >> right & 1) as usize;
        while ones > budget {
            ones -= (bits >> left & 1) as usize;
            left += 1;
        }
        if right + 1 - left > best_len {
            best_start = left;
            best_len = right + 1 - left;
        }
    }
    let window = ((1u64 << best_len) - 1) << best_start;
    L1Entry {
        start: best_start as u8,
        len: best_len as u8,
        ones: (u64::from(bits) & window).count_ones() as u8,
    }
}

#[derive(Debug, Clone)]
pub struct LutL1 {
    b: usize,
    table: Vec<u16>,
}

impl LutL1 {
    pub fn block_bits(&self) -> usize {
        self.b
    }

    /// Entry for `bits` with budget `k'` in `[0, b]`.
    #[inline]
    pub fn get(&self, bits: u32, budget: usize) -> L1Entry {
        debug_assert!(budget <= self.b);
        L1Entry::decode(self.table[bits as usize * (self.b + 1) + budget])
    }
}

pub fn build_l1(b: usize) -> Result<LutL1> {
    check_block_bits(b)?;
    let mut table = Vec::with_capacity((1 << b) * (b + 1));
    for bits in 0..1u32 << b {
        for budget in 0..=b {
            table.push(best_window(bits, b, budget).encode());
        }
    }
    Ok(LutL1 { b, table })
}

#[derive(Debug, Clone)]
pub struct LutL2 {
    b: usize,
    table: Vec<u16>,
}

impl LutL2 {
    pub fn block_bits(&self) -> usize {
        self.b
    }

    /// Entry for blocks `left`, `right` with budget `k'` in `[0, 2b]`.
    #[inline]
    pub fn get(&self, left: u32, right: u32, budget: usize) -> L2Entry {
        debug_assert!(budget <= 2 * self.b);
        let row = ((left as usize) << self.b) | right as usize;
        L2Entry::decode(self.table[row * (2 * self.b + 1) + budget])
    }
}

pub fn l2_entries(b: usize) -> u64 {
    (1u64 << (2 * b)) * (2 * b as u64 + 1)
}

pub fn build_l2(b: usize) -> Result<LutL2> {
    check_block_bits(b)?;
    let entries = l2_entries(b);
    if entries > MAX_L2_ENTRIES {
        return Err(Error::Resource {
            what: "L2 lookup table entries",
            needed: entries,
            budget: MAX_L2_ENTRIES,
        });
    }
    let mut table = Vec::with_capacity(entries as usize);
    // suffix[a]: longest suffix of the left block with at most a ones.
    // prefix[c]: longest prefix of the right block with at most c ones.
    let mut suffix = vec![0usize; b + 1];
    let mut prefix = vec![0usize; b + 1];
    for left in 0..1u32 << b {
        let mut seen = 0;
        for pos in (0..b).rev() {
            if left >> pos & 1 == 1 {
                suffix[seen] = b - 1 - pos;
                seen += 1;
            }
        }
        suffix[seen..].fill(b);
        for right in 0..1u32 << b {
            let mut seen = 0;
            for pos in 0..b {
                if right >> pos & 1 == 1 {
                    prefix[seen] = pos;
                    seen += 1;
                }
            }
            prefix[seen..].fill(b);

            for budget in 0..=2 * b {
                // Prefer the longest suffix among equally long windows.
                let (mut best_suf, mut best_pre) = (0, 0);
                let mut best_len = None;
                for a in (0..=budget.min(b)).rev() {
                    let (s, p) = (suffix[a], prefix[(budget - a).min(b)]);
                    if best_len.is_none_or(|l| s + p > l) {
                        best_len = Some(s + p);
                        best_suf = s;
                        best_pre = p;
                    }
                }
                let suf_mask = if best_suf == 0 { 0 } else { ((1u32 << best_suf) - 1) << (b - best_suf) };
                let pre_mask = (1u32 << best_pre) - 1;
                let ones = (left & suf_mask).count_ones() + (right & pre_mask).count_ones();
                table.push(
                    L2Entry {
                        suffix: best_suf as u8,
                        prefix: best_pre as u8,
                        ones: ones as u8,
                    }
                    .encode(),
                );
            }
        }
    }
    Ok(LutL2 { b, table })
}
