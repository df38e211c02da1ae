use super::pack::{BitGather, PackedText};
use crate::text::{Diagonal, Seq};

/// Mismatch bit vector of one diagonal, cut into `b`-bit blocks.
///
/// Bit `t` (0-based) lives in block `t / b` at bit `t % b` and is set iff the
/// diagonal's `t`-th cells differ. Bits past `total_bits` are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MismatchBlocks {
    b: usize,
    blocks: Vec<u16>,
    total_bits: usize,
}

impl MismatchBlocks {
    pub fn block_bits(&self) -> usize {
        self.b
    }

    pub fn blocks(&self) -> &[u16] {
        &self.blocks
    }

    pub fn total_bits(&self) -> usize {
        self.total_bits
    }

    pub fn bit(&self, t: usize) -> bool {
        self.blocks[t / self.b] >> (t % self.b) & 1 == 1
    }

    /// Blocks for an explicit bit vector.
    pub fn from_bits(bits: &[bool], b: usize) -> Self {
        assert!((1..=16).contains(&b));
        let blocks = bits
            .chunks(b)
            .map(|c| c.iter().enumerate().fold(0u16, |acc, (i, &x)| acc | (u16::from(x) << i)))
            .collect();
        MismatchBlocks {
            b,
            blocks,
            total_bits: bits.len(),
        }
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }
}

struct BitSink {
    words: Vec<u64>,
    len: usize,
}

impl BitSink {
    fn with_capacity(bits: usize) -> Self {
        BitSink {
            words: vec![0; bits / 64 + 2],
            len: 0,
        }
    }

    #[inline]
    fn push(&mut self, val: u64, n: usize) {
        let (w, off) = (self.len / 64, self.len % 64);
        self.words[w] |= val << off;
        if off + n > 64 {
            self.words[w + 1] |= val >> (64 - off);
        }
        self.len += n;
    }

    #[inline]
    fn take(&self, at: usize, n: usize) -> u64 {
        let (w, off) = (at / 64, at % 64);
        let mut v = self.words[w] >> off;
        if off + n > 64 {
            v |= self.words[w + 1] << (64 - off);
        }
        v & ((1u64 << n) - 1)
    }
}

/// Mismatch blocks of one diagonal, built a packed word at a time: unaligned
/// word extraction on both sides, field comparison, then gathering of the
/// per-field flags into contiguous bits.
pub fn build_mismatch_blocks(packed: &PackedText, diag: Diagonal, b: usize) -> MismatchBlocks {
    let gather = BitGather::new(packed.masks().high);
    build_with(packed, &gather, diag, b)
}

pub(crate) fn build_with(
    packed: &PackedText,
    gather: &BitGather,
    diag: Diagonal,
    b: usize,
) -> MismatchBlocks {
    assert!((1..=16).contains(&b));
    let masks = packed.masks();
    let per = masks.per_word;
    let mut sink = BitSink::with_capacity(diag.len);
    let mut pos = 0;
    while pos < diag.len {
        let x = packed.word_at(Seq::First, diag.start1 + pos);
        let y = packed.word_at(Seq::Second, diag.start2 + pos);
        let flags = gather.apply(masks.mismatch(x, y));
        let n = per.min(diag.len - pos);
        let flags = if n == 64 { flags } else { flags & ((1u64 << n) - 1) };
        sink.push(flags, n);
        pos += n;
    }
    let blocks = (0..diag.len.div_ceil(b))
        .map(|i| {
            let n = b.min(diag.len - i * b);
            sink.take(i * b, n) as u16
        })
        .collect();
    MismatchBlocks {
        b,
        blocks,
        total_bits: diag.len,
    }
}
