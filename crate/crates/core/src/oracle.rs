//! Reference solver and match verification.

use std::collections::VecDeque;

use crate::error::Result;
use crate::par;
use crate::text::{MatchSpan, Text, Window};

/// Longest window with at most `k` mismatches on one diagonal, leftmost on ties.
///
/// Two-pointer scan keeping the offsets of the mismatches inside the current
/// window; never holds more than `k + 1` of them.
pub(crate) fn best_on_diagonal(text: &Text, diag: usize, k: usize) -> Window {
    let d = text.diagonal(diag);
    let a = &text.s1()[d.start1..d.start1 + d.len];
    let b = &text.s2()[d.start2..d.start2 + d.len];
    let mut inside = VecDeque::with_capacity(k.min(d.len) + 1);
    let mut left = 0;
    let mut best = Window::new(d.start1, d.start2, 0);
    for right in 0..d.len {
        if a[right] != b[right] {
            inside.push_back(right);
            if inside.len() > k {
                left = inside.pop_front().unwrap() + 1;
            }
        }
        let len = right + 1 - left;
        if len > best.len {
            best = Window::new(d.start1 + left, d.start2 + left, len);
        }
    }
    best
}

/// Quadratic-time k-LCF: maximum over all diagonals of the sliding-window scan.
///
/// Ties are broken towards the smallest `(start1, start2)`.
pub fn klcf_oracle(text: &Text, k: usize) -> MatchSpan {
    let best = (0..text.diagonal_count())
        .map(|d| best_on_diagonal(text, d, k))
        .fold(Window::default(), Window::best);
    MatchSpan::from_window(text, best)
}

/// Same as [`klcf_oracle`] with the diagonals fanned out over the thread pool.
pub fn klcf_oracle_par(text: &Text, k: usize) -> MatchSpan {
    let best = par::map_reduce(
        0..text.diagonal_count(),
        Window::default(),
        |d| best_on_diagonal(text, d, k),
        Window::best,
    );
    MatchSpan::from_window(text, best)
}

/// Checks that `span` has at most `k` mismatches and that its recorded
/// mismatch list is exact. Out-of-range spans are an error, not `false`.
pub fn verify_match(text: &Text, span: &MatchSpan, k: usize) -> Result<bool> {
    span.check_bounds(text)?;
    let actual = text.mismatch_offsets(span.start1, span.start2, span.len);
    Ok(actual.len() <= k && actual == span.mismatches)
}

/// Bounds on the k-LCF length implied by the exact LCF length `ell0`.
///
/// Lower: `max(ell0, min(n, k))`; upper: `min(n, (k + 1) * ell0 + k)` where
/// `n = min(n1, n2)`. The lower bound is the border-safe form; `ell0 + k` can
/// exceed the optimum when the exact match touches a string end.
pub fn klcf_bounds(ell0: usize, k: usize, n1: usize, n2: usize) -> (usize, usize) {
    let n = n1.min(n2);
    let lower = ell0.max(n.min(k));
    let upper = n.min(
        k.saturating_add(1)
            .saturating_mul(ell0)
            .saturating_add(k),
    );
    (lower, upper)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every substring pair, counted directly.
    fn brute_force(s1: &[u8], s2: &[u8], k: usize) -> (usize, usize, usize) {
        let mut best = (0, 0, 0);
        for i in 0..s1.len() {
            for j in 0..s2.len() {
                let mut mm = 0;
                let mut len = 0;
                while i + len < s1.len() && j + len < s2.len() {
                    mm += usize::from(s1[i + len] != s2[j + len]);
                    if mm > k {
                        break;
                    }
                    len += 1;
                }
                if len > best.0 {
                    best = (len, i, j);
                }
            }
        }
        best
    }

    #[test]
    fn abba_aaba() {
        let t = Text::from_bytes(b"abba", b"aaba");
        assert_eq!(brute_force(b"abba", b"aaba", 1), (4, 0, 0));
        let m = klcf_oracle(&t, 1);
        assert_eq!((m.len, m.pos1(), m.pos2()), (4, 1, 1));
        assert_eq!(m.mismatches, vec![1]);
    }

    #[test]
    fn identical_and_tiny() {
        let t = Text::from_bytes(b"abcde", b"abcde");
        assert_eq!(klcf_oracle(&t, 0).len, 5);
        let t = Text::from_bytes(b"ab", b"cd");
        assert_eq!(klcf_oracle(&t, 2).len, 2);
        let t = Text::from_bytes(b"", b"abc");
        assert_eq!(klcf_oracle(&t, 3), MatchSpan::default());
    }

    #[test]
    fn matches_brute_force_on_small_strings() {
        let words: [&[u8]; 7] = [b"abba", b"aaba", b"xab", b"aby", b"abcabcab", b"cbacba", b"a"];
        for s1 in words {
            for s2 in words {
                for k in 0..4 {
                    let t = Text::from_bytes(s1, s2);
                    let m = klcf_oracle(&t, k);
                    let (len, i, j) = brute_force(s1, s2, k);
                    assert_eq!((m.len, m.start1, m.start2), (len, i, j), "{s1:?} {s2:?} {k}");
                    assert_eq!(klcf_oracle_par(&t, k), m);
                }
            }
        }
    }

    #[test]
    fn verify() {
        let t = Text::from_bytes(b"abba", b"aaba");
        let span = MatchSpan { len: 4, start1: 0, start2: 0, mismatches: vec![1] };
        assert_eq!(verify_match(&t, &span, 1), Ok(true));
        assert_eq!(verify_match(&t, &span, 0), Ok(false));
        let wrong_list = MatchSpan { mismatches: vec![2], ..span.clone() };
        assert_eq!(verify_match(&t, &wrong_list, 1), Ok(false));
        assert_eq!(verify_match(&t, &MatchSpan::default(), 0), Ok(true));
        let oob = MatchSpan { len: 4, start1: 1, start2: 0, mismatches: vec![] };
        assert!(verify_match(&t, &oob, 4).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(klcf_bounds(2, 1, 4, 4), (2, 4));
        assert_eq!(klcf_bounds(0, 3, 10, 10), (3, 3));
        assert_eq!(klcf_bounds(5, 0, 9, 9), (5, 5));
        // ell0 + k overshoots when the exact match sits at a border
        let t = Text::from_bytes(b"xab", b"aby");
        assert_eq!(klcf_oracle(&t, 1).len, 2);
        assert_eq!(klcf_bounds(2, 1, 3, 3), (2, 3));
    }
}
