//! Small sequence utilities: lexicographic odometers over boxes of integer
//! sequences and distinct rearrangements of a multiset.

/// Advances `v` to the next lexicographic permutation of its multiset.
/// Returns `false` (leaving `v` sorted ascending) once the last permutation
/// has been passed.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        v.reverse();
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// All distinct rearrangements of `items`, in lexicographic order.
pub fn distinct_permutations<T: Ord + Clone>(items: &[T]) -> DistinctPermutations<T> {
    let mut current = items.to_vec();
    current.sort();
    DistinctPermutations {
        current,
        done: false,
    }
}

#[derive(Debug, Clone)]
pub struct DistinctPermutations<T> {
    current: Vec<T>,
    done: bool,
}

impl<T: Ord + Clone> Iterator for DistinctPermutations<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

/// Calls `visit` on every sequence `v` of length `len` with
/// `1 <= v[i] <= upper[i]`, in lexicographic order. Nothing is visited when
/// some bound is 0.
pub fn for_each_in_box(upper: &[u32], mut visit: impl FnMut(&[u32])) {
    if upper.contains(&0) {
        return;
    }
    let mut v = vec![1u32; upper.len()];
    loop {
        visit(&v);
        let mut i = v.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if v[i] < upper[i] {
                v[i] += 1;
                v[i + 1..].fill(1);
                break;
            }
        }
    }
}

/// Calls `visit` on every non-decreasing sequence of length `len` with
/// entries in `min..=max`, in lexicographic order.
pub fn for_each_nondecreasing(len: usize, min: u32, max: u32, mut visit: impl FnMut(&[u32])) {
    if max < min {
        return;
    }
    let mut v = vec![min; len];
    loop {
        visit(&v);
        let Some(i) = (0..len).rev().find(|&i| v[i] < max) else {
            return;
        };
        let next = v[i] + 1;
        v[i..].fill(next);
    }
}

/// All compositions of `total` into exactly `parts` positive parts, in
/// lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 1..=rest.saturating_sub(parts as u32 - 1) {
            prefix.push(first);
            go(rest - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts >= 1 && total as usize >= parts {
        go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

pub fn is_nondecreasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinct_permutations_skip_repeats() {
        let perms: Vec<_> = distinct_permutations(&[2, 1, 1]).collect();
        assert_eq!(perms, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        assert_eq!(distinct_permutations(&[1, 2, 3, 4]).count(), 24);
        assert_eq!(distinct_permutations(&[1, 1, 2, 2]).count(), 6);
        assert_eq!(distinct_permutations::<u32>(&[]).count(), 1);
        assert_eq!(distinct_permutations(&[7]).count(), 1);
    }

    #[test]
    fn box_odometer_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_in_box(&[2, 3], |v| seen.push(v.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![1, 1],
                vec![1, 2],
                vec![1, 3],
                vec![2, 1],
                vec![2, 2],
                vec![2, 3]
            ]
        );
        let mut count = 0;
        for_each_in_box(&[3, 0], |_| count += 1);
        assert_eq!(count, 0);
    }

    #[test]
    fn nondecreasing_counts_are_multichoose() {
        let mut count = 0;
        let mut prev: Option<Vec<u32>> = None;
        for_each_nondecreasing(3, 1, 4, |v| {
            assert!(is_nondecreasing(v));
            if let Some(p) = &prev {
                assert!(p.as_slice() < v);
            }
            prev = Some(v.to_vec());
            count += 1;
        });
        // C(4 + 3 - 1, 3)
        assert_eq!(count, 20);
        let mut seen = Vec::new();
        for_each_nondecreasing(2, 2, 3, |v| seen.push(v.to_vec()));
        assert_eq!(seen, vec![vec![2, 2], vec![2, 3], vec![3, 3]]);
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(compositions(5, 3).len(), 6);
        assert_eq!(compositions(4, 4), vec![vec![1, 1, 1, 1]]);
        assert!(compositions(2, 3).is_empty());
    }
}
