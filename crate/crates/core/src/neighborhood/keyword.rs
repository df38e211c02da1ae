use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::lce::LceIndex;
use crate::text::{Seq, Text};

/// A string of the k-deletion neighborhood of a length-`len` source
/// substring, stored as the source location plus the deleted offsets.
///
/// `deletes` holds exactly `k` strictly increasing 0-based offsets in
/// `[0, len)`; the keyword itself is the source with those offsets removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Keyword {
    pub seq: Seq,
    pub start: usize,
    pub len: usize,
    pub deletes: Vec<usize>,
}

impl Keyword {
    pub fn k(&self) -> usize {
        self.deletes.len()
    }

    /// The keyword as an explicit symbol string (length `len - k`).
    pub fn materialize(&self, text: &Text) -> Vec<u32> {
        let src = &text.seq(self.seq)[self.start..self.start + self.len];
        let mut dels = self.deletes.iter().peekable();
        src.iter()
            .enumerate()
            .filter(|(i, _)| {
                if dels.peek() == Some(&i) {
                    dels.next();
                    false
                } else {
                    true
                }
            })
            .map(|(_, &c)| c)
            .collect()
    }
}

/// All `k`-subsets of `0..len` as sorted tuples, in decreasing
/// lexicographic order: `(3,4), (2,4), (2,3), (1,4), ...` for `len = 5, k = 2`.
#[derive(Debug, Clone)]
pub struct DeleteTuples {
    len: usize,
    cur: Vec<usize>,
    done: bool,
}

impl DeleteTuples {
    pub fn new(len: usize, k: usize) -> Self {
        DeleteTuples {
            len,
            cur: (len.saturating_sub(k)..len).collect(),
            done: k > len,
        }
    }
}

impl Iterator for DeleteTuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let k = self.cur.len();
        // Rightmost entry that can move one step left.
        let movable = (0..k).rev().find(|&i| {
            let floor = if i == 0 { 0 } else { self.cur[i - 1] + 1 };
            self.cur[i] > floor
        });
        match movable {
            None => self.done = true,
            Some(i) => {
                self.cur[i] -= 1;
                for m in i + 1..k {
                    self.cur[m] = self.len - k + m;
                }
            }
        }
        Some(out)
    }
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// The `C(len, k)` keywords of the source `seq[start..start + len]`.
pub fn enumerate_neighborhood(
    text: &Text,
    seq: Seq,
    start: usize,
    len: usize,
    k: usize,
) -> Result<impl Iterator<Item = Keyword>> {
    if len < k {
        return Err(Error::InvalidParameter(format!(
            "source length {len} is shorter than k = {k}"
        )));
    }
    if start + len > text.seq(seq).len() {
        return Err(Error::InvalidParameter(format!(
            "source [{start}, {}) outside sequence of length {}",
            start + len,
            text.seq(seq).len()
        )));
    }
    Ok(DeleteTuples::new(len, k).map(move |deletes| Keyword {
        seq,
        start,
        len,
        deletes,
    }))
}

/// Compares two keywords sharing `deletes` by content, given the concat
/// positions of their sources. One LCE query per run between deletions.
#[inline]
pub(crate) fn cmp_content(
    concat: &[u32],
    lce: &LceIndex,
    p: usize,
    q: usize,
    deletes: &[usize],
    len: usize,
) -> Ordering {
    if p == q {
        return Ordering::Equal;
    }
    let mut from = 0;
    for stop in deletes.iter().copied().chain(std::iter::once(len)) {
        if stop > from {
            let l = lce.lce_forward(p + from, q + from);
            if l < stop - from {
                return concat[p + from + l].cmp(&concat[q + from + l]);
            }
        }
        from = stop + 1;
    }
    Ordering::Equal
}

/// Total order on keywords of equal source length and `k`: delete tuple
/// first, then content. `Equal` exactly when the two sources lie within
/// Hamming distance `k` of each other via this shared deletion set.
pub fn keyword_order(text: &Text, lce: &LceIndex, a: &Keyword, b: &Keyword) -> Result<Ordering> {
    if a.len != b.len || a.k() != b.k() {
        return Err(Error::InvalidParameter(format!(
            "keywords differ in shape: (len {}, k {}) vs (len {}, k {})",
            a.len,
            a.k(),
            b.len,
            b.k()
        )));
    }
    Ok(a.deletes.cmp(&b.deletes).then_with(|| {
        cmp_content(
            text.concat(),
            lce,
            text.concat_offset(a.seq) + a.start,
            text.concat_offset(b.seq) + b.start,
            &a.deletes,
            a.len,
        )
    }))
}
