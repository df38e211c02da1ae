//! Constant-time longest-common-extension queries over `s1 # s2 $`.
//!
//! One suffix array (with LCP and a sparse-table RMQ) is built over the
//! concatenation for forward extensions, and a second over its reverse for
//! backward extensions. The unique separators stop every extension at a
//! sequence boundary.

mod rmq;
mod suffix;

pub use rmq::SparseTable;
pub use suffix::{inverse, lcp_array, suffix_array};

use crate::text::{MatchSpan, Seq, Text, Window};

/// Suffix array, its inverse, LCP array and RMQ over the LCP array.
#[derive(Debug, Clone)]
pub struct SuffixIndex {
    pub sa: Vec<u32>,
    pub rank: Vec<u32>,
    pub lcp: Vec<u32>,
    rmq: SparseTable,
}

impl SuffixIndex {
    pub fn new(s: &[u32]) -> Self {
        let sa = suffix_array(s);
        let rank = inverse(&sa);
        let lcp = lcp_array(s, &sa, &rank);
        let rmq = SparseTable::new(&lcp);
        SuffixIndex { sa, rank, lcp, rmq }
    }

    /// Longest common prefix of the suffixes starting at `p` and `q`.
    #[inline]
    pub fn lce(&self, p: usize, q: usize) -> usize {
        if p == q {
            return self.sa.len() - p;
        }
        let (a, b) = (self.rank[p] as usize, self.rank[q] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.rmq.min(lo + 1, hi) as usize
    }

    /// `min(lcp[l..=r])`.
    pub fn range_min(&self, l: usize, r: usize) -> u32 {
        self.rmq.min(l, r)
    }
}

#[derive(Debug, Clone)]
pub struct LceIndex {
    fwd: SuffixIndex,
    bwd: SuffixIndex,
    n1: usize,
    n2: usize,
}

/// Builds both suffix indexes for `text`.
pub fn build_lce(text: &Text) -> LceIndex {
    LceIndex::new(text)
}

impl LceIndex {
    pub fn new(text: &Text) -> Self {
        let concat = text.concat();
        let reversed: Vec<u32> = concat.iter().rev().copied().collect();
        LceIndex {
            fwd: SuffixIndex::new(concat),
            bwd: SuffixIndex::new(&reversed),
            n1: text.n1(),
            n2: text.n2(),
        }
    }

    pub fn forward_index(&self) -> &SuffixIndex {
        &self.fwd
    }

    pub fn backward_index(&self) -> &SuffixIndex {
        &self.bwd
    }

    /// Length of the concatenation the index was built over.
    #[inline]
    pub fn concat_len(&self) -> usize {
        self.n1 + self.n2 + 2
    }

    /// Longest common prefix of `concat[p..]` and `concat[q..]` (0-based).
    #[inline]
    pub fn lce_forward(&self, p: usize, q: usize) -> usize {
        self.fwd.lce(p, q)
    }

    /// Longest common suffix of `concat[..=p]` and `concat[..=q]` (0-based).
    #[inline]
    pub fn lce_backward(&self, p: usize, q: usize) -> usize {
        let last = self.concat_len() - 1;
        self.bwd.lce(last - p, last - q)
    }

    /// Exact match length starting at `s1[i1]` and `s2[i2]`.
    #[inline]
    pub fn forward(&self, i1: usize, i2: usize) -> usize {
        self.lce_forward(i1, self.n1 + 1 + i2)
    }

    /// Exact match length ending (inclusively) at `s1[i1]` and `s2[i2]`.
    #[inline]
    pub fn backward(&self, i1: usize, i2: usize) -> usize {
        self.lce_backward(i1, self.n1 + 1 + i2)
    }

    fn classify(&self, p: usize) -> Option<(Seq, usize)> {
        if p < self.n1 {
            Some((Seq::First, p))
        } else if p > self.n1 && p <= self.n1 + self.n2 {
            Some((Seq::Second, p - self.n1 - 1))
        } else {
            None
        }
    }

    /// Longest exact common substring, with the smallest `(start1, start2)`
    /// among all occurrences of that length.
    pub fn lcf0(&self) -> MatchSpan {
        let sa = &self.fwd.sa;
        let lcp = &self.fwd.lcp;
        let side = |r: usize| self.classify(sa[r] as usize).map(|(s, _)| s);

        let ell0 = (1..sa.len())
            .filter(|&r| matches!((side(r - 1), side(r)), (Some(a), Some(b)) if a != b))
            .map(|r| lcp[r] as usize)
            .max()
            .unwrap_or(0);
        if ell0 == 0 {
            return MatchSpan::default();
        }

        // Each maximal rank interval whose internal LCPs are >= ell0 holds one
        // distinct length-ell0 string; its smallest occurrence per side is a
        // candidate.
        let mut best: Option<Window> = None;
        let mut r = 0;
        while r < sa.len() {
            let mut end = r;
            while end + 1 < sa.len() && lcp[end + 1] as usize >= ell0 {
                end += 1;
            }
            let (mut first, mut second) = (usize::MAX, usize::MAX);
            for &p in &sa[r..=end] {
                match self.classify(p as usize) {
                    Some((Seq::First, i)) => first = first.min(i),
                    Some((Seq::Second, i)) => second = second.min(i),
                    None => {}
                }
            }
            if first != usize::MAX && second != usize::MAX {
                best = Window::best_opt(best, Some(Window::new(first, second, ell0)));
            }
            r = end + 1;
        }
        let w = best.expect("an interval realises ell0");
        MatchSpan {
            len: w.len,
            start1: w.start1,
            start2: w.start2,
            mismatches: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::klcf_oracle;

    fn naive_fwd(s: &[u32], p: usize, q: usize) -> usize {
        s[p..].iter().zip(&s[q..]).take_while(|(a, b)| a == b).count()
    }

    fn naive_bwd(s: &[u32], p: usize, q: usize) -> usize {
        s[..=p]
            .iter()
            .rev()
            .zip(s[..=q].iter().rev())
            .take_while(|(a, b)| a == b)
            .count()
    }

    #[test]
    fn abba_aaba_queries() {
        let t = Text::from_bytes(b"abba", b"aaba");
        let idx = build_lce(&t);
        assert_eq!(idx.forward_index().sa.len(), 10);
        assert_eq!(idx.forward(0, 0), 1);
        assert_eq!(idx.forward(2, 2), 2);
        assert_eq!(idx.backward(3, 3), 2);
        for p in 0..10 {
            assert_eq!(idx.lce_forward(p, p), 10 - p);
            assert_eq!(idx.lce_backward(p, p), p + 1);
        }
        let t = Text::from_bytes(b"abc", b"abc");
        assert_eq!(build_lce(&t).backward(2, 2), 3);
    }

    #[test]
    fn exhaustive_against_naive_scan() {
        let t = Text::from_bytes(b"abaababaabaab", b"babaabbab");
        let idx = build_lce(&t);
        let s = t.concat();
        for p in 0..s.len() {
            for q in 0..s.len() {
                assert_eq!(idx.lce_forward(p, q), naive_fwd(s, p, q));
                assert_eq!(idx.lce_backward(p, q), naive_bwd(s, p, q));
            }
        }
    }

    #[test]
    fn empty_second_sequence() {
        let t = Text::from_bytes(b"abc", b"");
        let idx = build_lce(&t);
        assert_eq!(idx.forward_index().sa.len(), 5);
        assert_eq!(idx.lcf0().len, 0);
    }

    #[test]
    fn lcf0_examples() {
        let span = build_lce(&Text::from_bytes(b"abba", b"aaba")).lcf0();
        assert_eq!((span.len, span.start1, span.start2), (2, 0, 1));
        assert_eq!(build_lce(&Text::from_bytes(b"aaa", b"aaa")).lcf0().len, 3);
        assert_eq!(build_lce(&Text::from_bytes(b"abc", b"xyz")).lcf0().len, 0);
    }

    #[test]
    fn lcf0_witness_is_oracle_witness() {
        let pairs: [(&[u8], &[u8]); 4] = [
            (b"abcabcxabc", b"zzabcqabc"),
            (b"aaaa", b"aa"),
            (b"abab", b"baba"),
            (b"mississippi", b"sipississ"),
        ];
        for (a, b) in pairs {
            let t = Text::from_bytes(a, b);
            assert_eq!(build_lce(&t).lcf0(), klcf_oracle(&t, 0));
        }
    }
}
