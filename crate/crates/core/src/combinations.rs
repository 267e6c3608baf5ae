/// Advances `idx` to the next `k`-subset of `0..m` in lexicographic order.
/// Returns `false` once the last subset has been passed.
pub(crate) fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Calls `f` on every `k`-subset of `0..m` in lexicographic order until it
/// returns `true`; returns that subset.
pub(crate) fn find_subset<F>(m: usize, k: usize, mut f: F) -> Option<alloc::vec::Vec<usize>>
where
    F: FnMut(&[usize]) -> bool,
{
    if k > m {
        return None;
    }
    let mut idx: alloc::vec::Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return Some(idx);
        }
        if k == 0 || !next_combination(&mut idx, m) {
            return None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn enumerates_in_lex_order() {
        let mut seen = Vec::new();
        find_subset(4, 2, |s| {
            seen.push((s[0], s[1]));
            false
        });
        assert_eq!(seen, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let mut count = 0;
        find_subset(6, 0, |_| {
            count += 1;
            false
        });
        assert_eq!(count, 1);
        assert_eq!(find_subset(2, 3, |_| true), None);
    }
}
