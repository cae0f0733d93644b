//! Exhaustive enumeration of set partitions, in canonical order.

use crate::partition::SetPartition;

/// Which partitions of `[n]` to list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Filter {
    pub blocks: Option<usize>,
    pub singletons: Option<usize>,
    pub noncrossing_only: bool,
}

impl Filter {
    pub fn noncrossing() -> Self {
        Filter {
            noncrossing_only: true,
            ..Filter::default()
        }
    }

    pub fn nc(k: Option<usize>, s: Option<usize>) -> Self {
        Filter {
            blocks: k,
            singletons: s,
            noncrossing_only: true,
        }
    }

    fn accepts(&self, pi: &SetPartition) -> bool {
        self.blocks.is_none_or(|k| pi.block_count() == k)
            && self.singletons.is_none_or(|s| pi.singleton_count() == s)
    }
}

/// All partitions of `[n]` passing `filter`, sorted by restricted growth string.
pub fn enumerate(n: usize, filter: Filter) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut labels = Vec::with_capacity(n);
    if filter.noncrossing_only {
        let mut stack = Vec::new();
        nc_rec(n, &mut labels, &mut stack, 0, &filter, &mut out);
    } else {
        all_rec(n, &mut labels, 0, &filter, &mut out);
    }
    out
}

/// Noncrossing partitions of `[n]`.
pub fn noncrossing(n: usize) -> Vec<SetPartition> {
    enumerate(n, Filter::noncrossing())
}

/// `NC(n, k, s)`, with `None` meaning unrestricted.
pub fn nc(n: usize, k: Option<usize>, s: Option<usize>) -> Vec<SetPartition> {
    enumerate(n, Filter::nc(k, s))
}

/// Every set partition of `[n]`.
pub fn all(n: usize) -> Vec<SetPartition> {
    enumerate(n, Filter::default())
}

fn too_many_blocks(used: usize, filter: &Filter) -> bool {
    filter.blocks.is_some_and(|k| used > k)
}

fn all_rec(n: usize, labels: &mut Vec<u8>, used: usize, filter: &Filter, out: &mut Vec<SetPartition>) {
    if labels.len() == n {
        let pi = SetPartition::from_labels(labels);
        if filter.accepts(&pi) {
            out.push(pi);
        }
        return;
    }
    for l in 0..=used {
        let next_used = used.max(l + 1);
        if too_many_blocks(next_used, filter) {
            continue;
        }
        labels.push(l as u8);
        all_rec(n, labels, next_used, filter, out);
        labels.pop();
    }
}

/// Open blocks live on a stack; joining a block closes every block opened after it.
fn nc_rec(
    n: usize,
    labels: &mut Vec<u8>,
    stack: &mut Vec<u8>,
    used: usize,
    filter: &Filter,
    out: &mut Vec<SetPartition>,
) {
    if labels.len() == n {
        let pi = SetPartition::from_labels(labels);
        if filter.accepts(&pi) {
            out.push(pi);
        }
        return;
    }
    let mut options: Vec<(usize, u8)> = stack.iter().enumerate().map(|(d, &l)| (d, l)).collect();
    options.sort_by_key(|&(_, l)| l);
    for (depth, l) in options {
        let saved: Vec<u8> = stack.split_off(depth + 1);
        labels.push(l);
        nc_rec(n, labels, stack, used, filter, out);
        labels.pop();
        stack.extend(saved);
    }
    if !too_many_blocks(used + 1, filter) {
        let l = used as u8;
        labels.push(l);
        stack.push(l);
        nc_rec(n, labels, stack, used + 1, filter, out);
        stack.pop();
        labels.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn bell(n: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 0..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                let v = next.last().unwrap() + x;
                next.push(v);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn catalan_and_bell_counts() {
        for n in 0..=10usize {
            let catalan = binomial(2 * n as u64, n as u64) / (n as u64 + 1);
            assert_eq!(noncrossing(n).len() as u64, catalan, "n={n}");
        }
        for n in 0..=8 {
            assert_eq!(all(n).len() as u64, bell(n), "n={n}");
        }
        assert_eq!(noncrossing(4).len(), 14);
        assert_eq!(all(3).len(), 5);
    }

    #[test]
    fn narayana_counts() {
        for n in 1..=10u64 {
            for k in 1..=n {
                let narayana = binomial(n, k) * binomial(n, k - 1) / n;
                assert_eq!(
                    nc(n as usize, Some(k as usize), None).len() as u64,
                    narayana,
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn flag_family_size() {
        assert_eq!(nc(6, Some(2), Some(0)).len(), 9);
        assert_eq!(nc(6, Some(3), Some(0)).len(), 5);
    }

    #[test]
    fn canonical_order_and_agreement_with_filtering() {
        for n in 0..=7 {
            let list = noncrossing(n);
            assert!(list.windows(2).all(|w| w[0] < w[1]));
            let filtered: Vec<_> = all(n).into_iter().filter(|p| p.is_noncrossing()).collect();
            assert_eq!(list, filtered);
            for k in 0..=n {
                for s in 0..=n {
                    let direct = nc(n, Some(k), Some(s));
                    let by_hand: Vec<_> = list
                        .iter()
                        .filter(|p| p.block_count() == k && p.singleton_count() == s)
                        .cloned()
                        .collect();
                    assert_eq!(direct, by_hand);
                }
            }
        }
    }
}
