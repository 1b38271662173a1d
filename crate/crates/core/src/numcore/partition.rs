use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Non-increasing list of positive integers.
///
/// In this crate a partition of `k` names the exponents of the cyclic
/// factors of an abelian `p`-group of order `p^k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts `parts` into non-increasing order and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Largest part, zero for the empty partition.
    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Subtract one from every part and drop the parts that reach zero.
    pub fn lowered(&self) -> Partition {
        Partition(self.0.iter().filter(|&&p| p > 1).map(|&p| p - 1).collect())
    }

    /// Merge two partitions (direct product of the corresponding p-groups).
    pub fn merged(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// All partitions of `k` in reverse-lexicographic order
/// (`[4], [3,1], [2,2], [2,1,1], [1,1,1,1]` for `k = 4`).
///
/// `k = 0` yields the single empty partition.
pub fn partitions_of(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(k as usize);
    fill(k, k, &mut prefix, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for first in (1..=remaining.min(max_part)).rev() {
        prefix.push(first);
        fill(remaining - first, first, prefix, out);
        prefix.pop();
    }
}

/// Number of partitions of `k`, by the standard dynamic program over part sizes.
pub fn partition_count(k: u32) -> u64 {
    let k = k as usize;
    let mut ways = vec![0u64; k + 1];
    ways[0] = 1;
    for part in 1..=k {
        for total in part..=k {
            ways[total] += ways[total - part];
        }
    }
    ways[k]
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    // Euler's pentagonal-number recurrence; independent of the enumeration.
    fn pentagonal_oracle(n: usize) -> Vec<u64> {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            let mut j = 1i64;
            loop {
                let g1 = (j * (3 * j - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if j % 2 == 1 { 1 } else { -1 };
                total += sign * p[m - g1];
                let g2 = (j * (3 * j + 1) / 2) as usize;
                if g2 <= m {
                    total += sign * p[m - g2];
                }
                j += 1;
            }
            p[m] = total;
        }
        p.into_iter().map(|v| v as u64).collect()
    }

    fn parts(v: &[Partition]) -> Vec<Vec<u32>> {
        v.iter().map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(parts(&partitions_of(1)), vec![vec![1]]);
        assert_eq!(
            parts(&partitions_of(4)),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(partitions_of(7).len(), 15);
        assert_eq!(parts(&partitions_of(0)), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        let oracle = pentagonal_oracle(30);
        assert_eq!(oracle[30], 5604);
        for k in 1..=30u32 {
            let all = partitions_of(k);
            assert_eq!(all.len() as u64, oracle[k as usize], "k = {k}");
            assert_eq!(partition_count(k), oracle[k as usize]);
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            for p in &all {
                assert_eq!(p.total(), k);
                assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            }
            // Reverse-lexicographic: strictly decreasing in lexicographic order.
            assert!(all.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn lowering_and_merging() {
        let p = Partition::new(vec![1, 3, 0, 2]);
        assert_eq!(p.parts(), &[3, 2, 1]);
        assert_eq!(p.lowered().parts(), &[2, 1]);
        assert_eq!(p.merged(&Partition::new(vec![2])).parts(), &[3, 2, 2, 1]);
        assert_eq!(Partition::default().largest(), 0);
    }
}
