use std::cmp::Ordering;
use std::ops::Range;

use super::keyword::{binomial, cmp_content, DeleteTuples, Keyword};
use crate::error::{Error, Result};
use crate::lce::LceIndex;
use crate::par;
use crate::text::{Seq, Text};

/// Sorted keywords of every length-`len` source substring starting in a
/// piece of `s1`.
///
/// Since every source contributes every delete tuple, the sorted array is
/// laid out as one group per tuple (tuples in increasing order), each group
/// holding all source starts ordered by keyword content and then by start.
/// A keyword is therefore one `u32` plus a shared tuple.
#[derive(Debug, Clone)]
pub struct KeywordIndex {
    piece: Range<usize>,
    len: usize,
    k: usize,
    sources: usize,
    tuples: Vec<usize>,
    entries: Vec<u32>,
}

impl KeywordIndex {
    pub fn piece(&self) -> Range<usize> {
        self.piece.clone()
    }

    /// Source length of every keyword.
    pub fn source_len(&self) -> usize {
        self.len
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of keywords `N_piece`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn groups(&self) -> usize {
        self.entries.len().checked_div(self.sources).unwrap_or(0)
    }

    fn tuple(&self, g: usize) -> &[usize] {
        &self.tuples[g * self.k..(g + 1) * self.k]
    }

    /// The `e`-th keyword in sorted order.
    pub fn get(&self, e: usize) -> Keyword {
        let g = e / self.sources;
        Keyword {
            seq: Seq::First,
            start: self.entries[e] as usize,
            len: self.len,
            deletes: self.tuple(g).to_vec(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Keyword> + '_ {
        (0..self.len()).map(|e| self.get(e))
    }

    /// Smallest `s1` start in group `g` whose keyword equals the keyword of
    /// the source at concat position `q` under the same tuple.
    pub(crate) fn lookup(&self, text: &Text, lce: &LceIndex, g: usize, q: usize) -> Option<usize> {
        let group = &self.entries[g * self.sources..(g + 1) * self.sources];
        let tuple = self.tuple(g);
        let concat = text.concat();
        let at = group.partition_point(|&e| {
            cmp_content(concat, lce, e as usize, q, tuple, self.len) == Ordering::Less
        });
        let hit = *group.get(at)?;
        (cmp_content(concat, lce, hit as usize, q, tuple, self.len) == Ordering::Equal)
            .then_some(hit as usize)
    }

    /// Smallest `s1` start sharing any keyword with the source at concat
    /// position `q`.
    pub(crate) fn lookup_any_tuple(&self, text: &Text, lce: &LceIndex, q: usize) -> Option<usize> {
        (0..self.groups())
            .filter_map(|g| self.lookup(text, lce, g, q))
            .min()
    }

    pub(crate) fn first_hit_any_tuple(&self, text: &Text, lce: &LceIndex, q: usize) -> Option<usize> {
        (0..self.groups()).find_map(|g| self.lookup(text, lce, g, q))
    }
}

/// Estimated storage of an index with `keywords` entries, in words.
pub fn estimated_words(keywords: u64, k: usize) -> u64 {
    keywords.saturating_mul(k as u64 + 2)
}

/// Sorted keyword index over all length-`len` sources that start in `piece`
/// and end inside it. Fails with a resource error when the estimated storage
/// exceeds `budget` words.
pub fn build_index(
    text: &Text,
    lce: &LceIndex,
    piece: Range<usize>,
    len: usize,
    k: usize,
    budget: u64,
) -> Result<KeywordIndex> {
    if len < k {
        return Err(Error::InvalidParameter(format!(
            "source length {len} is shorter than k = {k}"
        )));
    }
    let piece = piece.start.min(text.n1())..piece.end.min(text.n1());
    let sources = if piece.len() >= len && len > 0 {
        piece.len() - len + 1
    } else {
        0
    };
    let per_source = binomial(len, k);
    let keywords = (sources as u64).saturating_mul(per_source);
    let needed = estimated_words(keywords, k);
    if needed > budget {
        return Err(Error::Resource {
            what: "keyword index words",
            needed,
            budget,
        });
    }
    if sources == 0 {
        return Ok(KeywordIndex {
            piece,
            len,
            k,
            sources,
            tuples: Vec::new(),
            entries: Vec::new(),
        });
    }

    let mut tuples_desc: Vec<Vec<usize>> = DeleteTuples::new(len, k).collect();
    tuples_desc.reverse();
    let tuples: Vec<usize> = tuples_desc.into_iter().flatten().collect();

    let mut entries: Vec<u32> = Vec::with_capacity(keywords as usize);
    for _ in 0..per_source {
        entries.extend(piece.start as u32..(piece.start + sources) as u32);
    }
    let concat = text.concat();
    par::for_each_chunk_mut(&mut entries, sources, |g, group| {
        let tuple = &tuples[g * k..(g + 1) * k];
        group.sort_unstable_by(|&a, &b| {
            cmp_content(concat, lce, a as usize, b as usize, tuple, len).then(a.cmp(&b))
        });
    });

    Ok(KeywordIndex {
        piece,
        len,
        k,
        sources,
        tuples,
        entries,
    })
}

/// Smallest `s1` start of an indexed keyword equal to `kw`, if any.
pub fn query_index(
    idx: &KeywordIndex,
    text: &Text,
    lce: &LceIndex,
    kw: &Keyword,
) -> Result<Option<usize>> {
    if kw.len != idx.len || kw.k() != idx.k {
        return Err(Error::InvalidParameter(format!(
            "query keyword (len {}, k {}) does not fit index (len {}, k {})",
            kw.len,
            kw.k(),
            idx.len,
            idx.k
        )));
    }
    let groups = idx.groups();
    let (mut lo, mut hi) = (0, groups);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if idx.tuple(mid) < kw.deletes.as_slice() {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let at = lo;
    if at == groups || idx.tuple(at) != kw.deletes.as_slice() {
        return Ok(None);
    }
    let q = text.concat_offset(kw.seq) + kw.start;
    Ok(idx.lookup(text, lce, at, q))
}
