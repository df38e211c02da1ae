//! Input model and result types shared by every algorithm.

use crate::error::{Error, Result};

/// Which of the two input sequences a position belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Seq {
    First,
    Second,
}

/// A pair of sequences over a dense alphabet `[0, sigma)`.
///
/// Symbols are relabelled at construction so that only the letters actually
/// occurring in either input are used; `labels()[c]` recovers the original
/// value of dense symbol `c`. The concatenation `s1 SEP1 s2 SEP2` used by the
/// suffix-array machinery is materialised once, with `SEP1 = sigma` and
/// `SEP2 = sigma + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    n1: usize,
    n2: usize,
    sigma: u32,
    concat: Vec<u32>,
    labels: Vec<u32>,
}

impl Text {
    /// Builds a text from raw symbol values, densifying their joint alphabet.
    pub fn from_symbols(s1: &[u32], s2: &[u32]) -> Self {
        let mut labels: Vec<u32> = s1.iter().chain(s2).copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let dense = |c: &u32| labels.binary_search(c).expect("label present") as u32;
        let sigma = labels.len() as u32;

        let mut concat = Vec::with_capacity(s1.len() + s2.len() + 2);
        concat.extend(s1.iter().map(dense));
        concat.push(sigma);
        concat.extend(s2.iter().map(dense));
        concat.push(sigma + 1);

        Text {
            n1: s1.len(),
            n2: s2.len(),
            sigma,
            concat,
            labels,
        }
    }

    pub fn from_bytes(s1: &[u8], s2: &[u8]) -> Self {
        let widen = |s: &[u8]| s.iter().map(|&b| u32::from(b)).collect::<Vec<_>>();
        Self::from_symbols(&widen(s1), &widen(s2))
    }

    #[inline]
    pub fn n1(&self) -> usize {
        self.n1
    }

    #[inline]
    pub fn n2(&self) -> usize {
        self.n2
    }

    /// Number of distinct symbols occurring in `s1` or `s2`.
    #[inline]
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    #[inline]
    pub fn s1(&self) -> &[u32] {
        &self.concat[..self.n1]
    }

    #[inline]
    pub fn s2(&self) -> &[u32] {
        &self.concat[self.n1 + 1..self.n1 + 1 + self.n2]
    }

    /// `s1 SEP1 s2 SEP2`, length `n1 + n2 + 2`.
    #[inline]
    pub fn concat(&self) -> &[u32] {
        &self.concat
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn seq(&self, which: Seq) -> &[u32] {
        match which {
            Seq::First => self.s1(),
            Seq::Second => self.s2(),
        }
    }

    /// Offset of a sequence inside `concat()`.
    #[inline]
    pub fn concat_offset(&self, which: Seq) -> usize {
        match which {
            Seq::First => 0,
            Seq::Second => self.n1 + 1,
        }
    }

    /// Original symbol values of one sequence.
    pub fn decode(&self, which: Seq) -> Vec<u32> {
        self.seq(which)
            .iter()
            .map(|&c| self.labels[c as usize])
            .collect()
    }

    #[inline]
    pub fn min_len(&self) -> usize {
        self.n1.min(self.n2)
    }

    /// Number of diagonals (alignments) of the `n1 x n2` comparison matrix.
    pub fn diagonal_count(&self) -> usize {
        if self.n1 == 0 || self.n2 == 0 {
            0
        } else {
            self.n1 + self.n2 - 1
        }
    }

    /// Diagonal number `idx` in `0..diagonal_count()`, ordered from the one
    /// starting at `(n1 - 1, 0)` to the one starting at `(0, n2 - 1)`.
    pub fn diagonal(&self, idx: usize) -> Diagonal {
        debug_assert!(idx < self.diagonal_count());
        let (start1, start2) = if idx < self.n1 {
            (self.n1 - 1 - idx, 0)
        } else {
            (0, idx + 1 - self.n1)
        };
        Diagonal {
            start1,
            start2,
            len: (self.n1 - start1).min(self.n2 - start2),
        }
    }

    /// Offsets `t` in `[0, len)` where `s1[start1 + t] != s2[start2 + t]`.
    pub fn mismatch_offsets(&self, start1: usize, start2: usize, len: usize) -> Vec<usize> {
        let a = &self.s1()[start1..start1 + len];
        let b = &self.s2()[start2..start2 + len];
        a.iter()
            .zip(b)
            .enumerate()
            .filter(|(_, (x, y))| x != y)
            .map(|(t, _)| t)
            .collect()
    }
}

/// One alignment of `s2` against `s1`: the cells `(start1 + t, start2 + t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Diagonal {
    pub start1: usize,
    pub start2: usize,
    pub len: usize,
}

impl Diagonal {
    /// Signed offset `start2 - start1`.
    pub fn offset(&self) -> isize {
        self.start2 as isize - self.start1 as isize
    }
}

/// A candidate common substring, without its mismatch list.
///
/// `best` implements the global tie-break: longer wins, then smaller
/// `start1`, then smaller `start2`. It is associative and commutative, so it
/// can drive parallel reductions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Window {
    pub len: usize,
    pub start1: usize,
    pub start2: usize,
}

impl Window {
    pub fn new(start1: usize, start2: usize, len: usize) -> Self {
        Window { len, start1, start2 }
    }

    #[inline]
    fn key(&self) -> (std::cmp::Reverse<usize>, usize, usize) {
        (std::cmp::Reverse(self.len), self.start1, self.start2)
    }

    #[inline]
    pub fn best(self, other: Window) -> Window {
        if other.key() < self.key() {
            other
        } else {
            self
        }
    }

    pub fn best_opt(a: Option<Window>, b: Option<Window>) -> Option<Window> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.best(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }
}

/// A reported common substring with at most k mismatches.
///
/// `start1` and `start2` are 0-based; [`MatchSpan::pos1`] and
/// [`MatchSpan::pos2`] give the 1-based positions used in user-facing output.
/// `mismatches` lists the offsets within the span where the two sides differ.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MatchSpan {
    pub len: usize,
    pub start1: usize,
    pub start2: usize,
    pub mismatches: Vec<usize>,
}

impl MatchSpan {
    /// Materialises a window, recomputing its mismatch offsets.
    pub fn from_window(text: &Text, w: Window) -> Self {
        MatchSpan {
            len: w.len,
            start1: w.start1,
            start2: w.start2,
            mismatches: text.mismatch_offsets(w.start1, w.start2, w.len),
        }
    }

    pub fn window(&self) -> Window {
        Window::new(self.start1, self.start2, self.len)
    }

    pub fn pos1(&self) -> usize {
        self.start1 + 1
    }

    pub fn pos2(&self) -> usize {
        self.start2 + 1
    }

    pub(crate) fn check_bounds(&self, text: &Text) -> Result<()> {
        if self.start1 + self.len > text.n1()
            || self.start2 + self.len > text.n2()
            || self.start1 > text.n1()
            || self.start2 > text.n2()
        {
            return Err(Error::OutOfBounds {
                start1: self.start1,
                start2: self.start2,
                len: self.len,
                n1: text.n1(),
                n2: text.n2(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn densifies_joint_alphabet() {
        let t = Text::from_bytes(b"abba", b"aaba");
        assert_eq!(t.sigma(), 2);
        assert_eq!(t.s1(), &[0, 1, 1, 0]);
        assert_eq!(t.s2(), &[0, 0, 1, 0]);
        assert_eq!(t.concat().len(), 10);
        assert_eq!(t.concat()[4], 2);
        assert_eq!(t.concat()[9], 3);
        assert_eq!(t.decode(Seq::First), b"abba".map(u32::from).to_vec());
    }

    #[test]
    fn five_distinct_bytes_round_trip() {
        let t = Text::from_bytes(b"zq!zA", b"~q");
        assert_eq!(t.sigma(), 5);
        let back: Vec<u8> = t.decode(Seq::First).iter().map(|&c| c as u8).collect();
        assert_eq!(back, b"zq!zA");
        assert!(t.s1().iter().chain(t.s2()).all(|&c| c < 5));
    }

    #[test]
    fn empty_sequences() {
        let t = Text::from_bytes(b"", b"");
        assert_eq!(t.sigma(), 0);
        assert_eq!(t.concat(), &[0, 1]);
        assert_eq!(t.diagonal_count(), 0);
    }

    #[test]
    fn diagonals_cover_matrix() {
        let t = Text::from_bytes(b"abc", b"abcde");
        let cells: usize = (0..t.diagonal_count()).map(|d| t.diagonal(d).len).sum();
        assert_eq!(cells, 15);
        assert_eq!(t.diagonal(0), Diagonal { start1: 2, start2: 0, len: 1 });
        assert_eq!(t.diagonal(2).offset(), 0);
        assert_eq!(t.diagonal(6), Diagonal { start1: 0, start2: 4, len: 1 });
    }

    #[test]
    fn window_tie_break() {
        let a = Window::new(3, 0, 5);
        let b = Window::new(1, 7, 5);
        let c = Window::new(1, 2, 5);
        assert_eq!(a.best(b), b);
        assert_eq!(b.best(c), c);
        assert_eq!(c.best(Window::new(9, 9, 6)).len, 6);
    }
}
