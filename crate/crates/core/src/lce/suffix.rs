//! Suffix array (prefix doubling) and LCP array (Kasai et al.).

/// Suffix array of `s` by prefix doubling; `O(n log^2 n)`.
///
/// Suffixes are compared as plain integer sequences, a proper prefix sorting
/// first.
pub fn suffix_array(s: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    if n <= 1 {
        return sa;
    }
    let mut rank: Vec<u64> = s.iter().map(|&c| u64::from(c)).collect();
    let mut next = vec![0u64; n];
    let mut step = 1;
    loop {
        let key = |i: u32| {
            let i = i as usize;
            let tail = if i + step < n { rank[i + step] + 1 } else { 0 };
            (rank[i], tail)
        };
        sa.sort_unstable_by_key(|&i| key(i));
        next[sa[0] as usize] = 0;
        for w in 1..n {
            let bump = u64::from(key(sa[w - 1]) != key(sa[w]));
            next[sa[w] as usize] = next[sa[w - 1] as usize] + bump;
        }
        std::mem::swap(&mut rank, &mut next);
        if rank[sa[n - 1] as usize] as usize == n - 1 {
            break;
        }
        step *= 2;
    }
    sa
}

/// `rank[sa[i]] = i`.
pub fn inverse(sa: &[u32]) -> Vec<u32> {
    let mut rank = vec![0u32; sa.len()];
    for (i, &p) in sa.iter().enumerate() {
        rank[p as usize] = i as u32;
    }
    rank
}

/// `lcp[i]` = longest common prefix of suffixes `sa[i - 1]` and `sa[i]`; `lcp[0] = 0`.
pub fn lcp_array(s: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_sa(s: &[u32]) -> Vec<u32> {
        let mut sa: Vec<u32> = (0..s.len() as u32).collect();
        sa.sort_by(|&a, &b| s[a as usize..].cmp(&s[b as usize..]));
        sa
    }

    fn naive_lcp(a: &[u32], b: &[u32]) -> u32 {
        a.iter().zip(b).take_while(|(x, y)| x == y).count() as u32
    }

    #[test]
    fn agrees_with_naive_sort() {
        let inputs: [&[u32]; 6] = [
            &[],
            &[7],
            &[0, 1, 1, 0, 2, 0, 0, 1, 0, 3],
            &[1, 1, 1, 1, 1, 1, 1],
            &[2, 1, 2, 1, 2, 1, 0],
            &[3, 0, 3, 0, 1, 2, 3, 0, 3, 0, 1, 4],
        ];
        for s in inputs {
            let sa = suffix_array(s);
            assert_eq!(sa, naive_sa(s), "{s:?}");
            let rank = inverse(&sa);
            let lcp = lcp_array(s, &sa, &rank);
            for i in 1..s.len() {
                let (p, q) = (sa[i - 1] as usize, sa[i] as usize);
                assert_eq!(lcp[i], naive_lcp(&s[p..], &s[q..]));
            }
        }
    }
}
