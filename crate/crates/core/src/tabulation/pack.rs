//! Word-packed sequences and constant-time field comparison.

use crate::text::{Seq, Text};

pub const WORD_BITS: usize = 64;

/// `max(1, ceil(log2 sigma))`.
pub fn bits_per_symbol(sigma: u32) -> u32 {
    if sigma <= 2 {
        1
    } else {
        32 - (sigma - 1).leading_zeros()
    }
}

/// Masks describing an (f)-word: `per_word = floor(64 / f)` fields of `f` bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldMasks {
    pub f: u32,
    pub per_word: usize,
    /// Top bit of every field.
    pub high: u64,
    /// All bits of every field except the top one.
    pub low: u64,
    /// Every bit that belongs to some field.
    pub used: u64,
}

impl FieldMasks {
    pub fn new(f: u32) -> Self {
        assert!((1..=32).contains(&f), "field width {f} out of range");
        let per_word = WORD_BITS / f as usize;
        let field_low = (1u64 << (f - 1)) - 1;
        let (mut high, mut low) = (0u64, 0u64);
        for i in 0..per_word {
            let shift = i * f as usize;
            high |= 1u64 << (shift + f as usize - 1);
            low |= field_low << shift;
        }
        FieldMasks {
            f,
            per_word,
            high,
            low,
            used: high | low,
        }
    }

    /// Top bit of each field set iff the corresponding fields of `x` and `y`
    /// differ; every other bit zero.
    #[inline]
    pub fn mismatch(&self, x: u64, y: u64) -> u64 {
        let z = x ^ y;
        (((z & self.low) + self.low) | z) & self.high
    }
}

/// See [`FieldMasks::mismatch`].
pub fn mismatch_word(x: u64, y: u64, f: u32) -> u64 {
    FieldMasks::new(f).mismatch(x, y)
}

/// Moves the bits selected by a fixed mask to the low end of the word, in
/// order (a software `pext` with the mask preprocessed into six shift steps).
#[derive(Debug, Clone, Copy)]
pub struct BitGather {
    mask: u64,
    moves: [u64; 6],
}

impl BitGather {
    pub fn new(mask: u64) -> Self {
        let mut m = mask;
        let mut mk = !m << 1;
        let mut moves = [0u64; 6];
        for (i, mv_out) in moves.iter_mut().enumerate() {
            let mut mp = mk ^ (mk << 1);
            mp ^= mp << 2;
            mp ^= mp << 4;
            mp ^= mp << 8;
            mp ^= mp << 16;
            mp ^= mp << 32;
            let mv = mp & m;
            *mv_out = mv;
            m = (m ^ mv) | (mv >> (1 << i));
            mk &= !mp;
        }
        BitGather { mask, moves }
    }

    #[inline]
    pub fn apply(&self, x: u64) -> u64 {
        let mut x = x & self.mask;
        for (i, &mv) in self.moves.iter().enumerate() {
            let t = x & mv;
            x = (x ^ t) | (t >> (1 << i));
        }
        x
    }
}

/// Both sequences packed into 64-bit words, `floor(64 / f)` symbols each;
/// symbol `i` of a sequence occupies field `i % per_word` of word
/// `i / per_word`. Unused fields and bits are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackedText {
    masks: FieldMasks,
    first: Vec<u64>,
    second: Vec<u64>,
    n1: usize,
    n2: usize,
}

fn pack_seq(s: &[u32], masks: &FieldMasks) -> Vec<u64> {
    s.chunks(masks.per_word)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u64, |w, (i, &c)| w | (u64::from(c) << (i * masks.f as usize)))
        })
        .collect()
}

pub fn pack(text: &Text) -> PackedText {
    let masks = FieldMasks::new(bits_per_symbol(text.sigma()));
    PackedText {
        first: pack_seq(text.s1(), &masks),
        second: pack_seq(text.s2(), &masks),
        masks,
        n1: text.n1(),
        n2: text.n2(),
    }
}

impl PackedText {
    pub fn masks(&self) -> &FieldMasks {
        &self.masks
    }

    pub fn f(&self) -> u32 {
        self.masks.f
    }

    pub fn per_word(&self) -> usize {
        self.masks.per_word
    }

    pub fn words(&self, which: Seq) -> &[u64] {
        match which {
            Seq::First => &self.first,
            Seq::Second => &self.second,
        }
    }

    pub fn len(&self, which: Seq) -> usize {
        match which {
            Seq::First => self.n1,
            Seq::Second => self.n2,
        }
    }

    pub fn unpack(&self, which: Seq) -> Vec<u32> {
        let field = (1u64 << self.masks.f) - 1;
        let f = self.masks.f as usize;
        (0..self.len(which))
            .map(|i| {
                let w = self.words(which)[i / self.masks.per_word];
                ((w >> ((i % self.masks.per_word) * f)) & field) as u32
            })
            .collect()
    }

    /// The (f)-word whose fields are symbols `from, from + 1, ...`; fields past
    /// the end of the sequence read as zero.
    #[inline]
    pub fn word_at(&self, which: Seq, from: usize) -> u64 {
        let words = self.words(which);
        let per = self.masks.per_word;
        let (w, r) = (from / per, from % per);
        let lo = words.get(w).copied().unwrap_or(0);
        if r == 0 {
            return lo;
        }
        let hi = words.get(w + 1).copied().unwrap_or(0);
        let f = self.masks.f as usize;
        ((lo >> (r * f)) | (hi << ((per - r) * f))) & self.masks.used
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_gather(x: u64, mask: u64) -> u64 {
        let mut out = 0;
        let mut k = 0;
        for i in 0..64 {
            if mask >> i & 1 == 1 {
                out |= (x >> i & 1) << k;
                k += 1;
            }
        }
        out
    }

    #[test]
    fn symbol_width() {
        assert_eq!(bits_per_symbol(0), 1);
        assert_eq!(bits_per_symbol(1), 1);
        assert_eq!(bits_per_symbol(2), 1);
        assert_eq!(bits_per_symbol(4), 2);
        assert_eq!(bits_per_symbol(5), 3);
        assert_eq!(bits_per_symbol(128), 7);
        assert_eq!(bits_per_symbol(129), 8);
    }

    #[test]
    fn abba_layout() {
        // joint alphabet {a, b, c, d} so that f = 2
        let t = Text::from_bytes(b"abba", b"cd");
        let p = pack(&t);
        assert_eq!((p.f(), p.per_word()), (2, 32));
        assert_eq!(p.words(Seq::First), &[0b00_01_01_00]);
        let t = Text::from_bytes(b"ab", b"ba");
        assert_eq!(pack(&t).per_word(), 64);
    }

    #[test]
    fn unpack_round_trip_and_word_at() {
        let s1: Vec<u32> = (0..300).map(|i| (i * 7 + i / 3) % 11).collect();
        let s2: Vec<u32> = (0..77).map(|i| (i * 5) % 11).collect();
        let t = Text::from_symbols(&s1, &s2);
        let p = pack(&t);
        assert_eq!(p.unpack(Seq::First), t.s1());
        assert_eq!(p.unpack(Seq::Second), t.s2());
        let f = p.f() as usize;
        for from in 0..300 {
            let w = p.word_at(Seq::First, from);
            for i in 0..p.per_word() {
                let want = t.s1().get(from + i).copied().unwrap_or(0);
                assert_eq!((w >> (i * f)) & ((1 << f) - 1), u64::from(want));
            }
        }
    }

    #[test]
    fn mismatch_word_examples() {
        assert_eq!(mismatch_word(0xdead_beef, 0xdead_beef, 4), 0);
        // fields (0,1,1,0) vs (0,0,1,0): only field 2 (index 1) differs
        let x = 0b00_01_01_00u64;
        let y = 0b00_01_00_00u64;
        assert_eq!(mismatch_word(x, y, 2), 0b10 << 2);
        assert_eq!(mismatch_word(0b1011, 0b0110, 1), 0b1101);
        // top-bit-only difference
        assert_eq!(mismatch_word(0b100, 0b000, 3), 0b100);
    }

    #[test]
    fn gather_matches_naive() {
        let mut x = 0x9e37_79b9_7f4a_7c15u64;
        for f in 1..=32 {
            let masks = FieldMasks::new(f);
            let g = BitGather::new(masks.high);
            for _ in 0..50 {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                assert_eq!(g.apply(x), naive_gather(x, masks.high));
            }
        }
        let odd = BitGather::new(0xf0f0_0000_8001_0003);
        assert_eq!(odd.apply(u64::MAX), (1 << 12) - 1);
    }
}
