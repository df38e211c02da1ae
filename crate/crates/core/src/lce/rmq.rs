/// Sparse table over a `u32` array: `O(n log n)` words, constant-time
/// minimum over any inclusive range.
#[derive(Debug, Clone)]
pub struct SparseTable {
    levels: Vec<Vec<u32>>,
}

impl SparseTable {
    pub fn new(values: &[u32]) -> Self {
        let mut levels = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev = levels.last().unwrap();
            let level: Vec<u32> = (0..=values.len() - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(level);
            width *= 2;
        }
        SparseTable { levels }
    }

    /// Minimum of `values[l..=r]`. Requires `l <= r < len`.
    #[inline]
    pub fn min(&self, l: usize, r: usize) -> u32 {
        debug_assert!(l <= r);
        let level = (usize::BITS - 1 - (r - l + 1).leading_zeros()) as usize;
        let row = &self.levels[level];
        row[l].min(row[r + 1 - (1 << level)])
    }

    pub fn len(&self) -> usize {
        self.levels[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels[0].is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_ranges() {
        let v = [5, 3, 8, 1, 9, 2, 7, 7, 0, 4, 6];
        let t = SparseTable::new(&v);
        for l in 0..v.len() {
            for r in l..v.len() {
                assert_eq!(t.min(l, r), *v[l..=r].iter().min().unwrap(), "[{l}, {r}]");
            }
        }
    }

    #[test]
    fn single_and_empty() {
        assert_eq!(SparseTable::new(&[4]).min(0, 0), 4);
        assert!(SparseTable::new(&[]).is_empty());
    }
}
