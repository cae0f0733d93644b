//! Integer partitions: shapes indexing irreducibles, Young subgroups and conjugacy classes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidIntegerPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidIntegerPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(IntegerPartition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition { parts }
    }

    /// The flag shape `(k, k, 1^(m-2k))` of `m`, or `None` when no noncrossing
    /// partition of `[m]` has `k` blocks and no singletons. The empty shape is
    /// returned for `m = k = 0`.
    pub fn flag(m: usize, k: usize) -> Option<Self> {
        if k == 0 {
            return (m == 0).then(IntegerPartition::default);
        }
        if 2 * k > m {
            return None;
        }
        let mut parts = vec![k, k];
        parts.extend(std::iter::repeat(1).take(m - 2 * k));
        Some(IntegerPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        IntegerPartition { parts }
    }

    /// Dominance order: every prefix sum of `self` is at most the matching prefix sum of `other`.
    pub fn dominance_leq(&self, other: &IntegerPartition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                found: other.size(),
            });
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `b(lambda) = sum (i - 1) lambda_i`.
    pub fn b_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.part(j) - i - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// Number of standard Young tableaux, `n! / prod(hooks)`.
    pub fn hook_dim(&self) -> BigInt {
        let mut num = BigInt::one();
        for m in 2..=self.size() {
            num *= m;
        }
        let mut den = BigInt::one();
        for h in self.hooks() {
            den *= h;
        }
        num / den
    }

    /// All partitions of `n`, in reverse lexicographic order (starting at `(n)`).
    pub fn all(n: usize) -> Vec<IntegerPartition> {
        fn rec(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
            if rest == 0 {
                out.push(IntegerPartition {
                    parts: current.clone(),
                });
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                current.push(p);
                rec(rest - p, p, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Parses `"4,2,2,1"`, `"4 2 2 1"` or `"(4,2,2,1)"`.
    pub fn parse(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for token in trimmed.split([',', ' ']).filter(|t| !t.is_empty()) {
            let p = token.trim().parse::<usize>().map_err(|_| Error::Parse {
                position: s.find(token).unwrap_or(0),
                message: format!("expected a positive integer, found {token:?}"),
            })?;
            parts.push(p);
        }
        IntegerPartition::new(parts)
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(parts: &[usize]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(IntegerPartition::new(vec![1, 2]).is_err());
        assert!(IntegerPartition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn conjugate_example() {
        assert_eq!(ip(&[4, 4, 2, 1]).conjugate(), ip(&[4, 3, 2, 2]));
    }

    #[test]
    fn dominance_examples() {
        assert!(ip(&[2, 2, 1, 1]).dominance_leq(&ip(&[3, 3])).unwrap());
        assert!(!ip(&[3, 3]).dominance_leq(&ip(&[2, 2, 1, 1])).unwrap());
        assert!(ip(&[3, 3]).dominance_leq(&ip(&[3, 3])).unwrap());
        assert!(ip(&[3]).dominance_leq(&ip(&[2, 2])).is_err());
    }

    #[test]
    fn hook_dims() {
        assert_eq!(ip(&[2, 2, 1, 1]).hook_dim(), BigInt::from(9));
        assert_eq!(ip(&[3, 3]).hook_dim(), BigInt::from(5));
        assert_eq!(ip(&[2, 2]).hook_dim(), BigInt::from(2));
        assert_eq!(ip(&[5]).hook_dim(), BigInt::from(1));
    }

    #[test]
    fn b_statistic_matches_flag_closed_form() {
        for n in 2..=12usize {
            for k in 1..=n / 2 {
                let lambda = IntegerPartition::flag(n, k).unwrap();
                let closed = (n - k) + (n - 2 * k) * (n - 2 * k + 1) / 2;
                assert_eq!(lambda.b_statistic(), closed, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| IntegerPartition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn flag_edge_cases() {
        assert_eq!(IntegerPartition::flag(0, 0), Some(IntegerPartition::default()));
        assert_eq!(IntegerPartition::flag(3, 0), None);
        assert_eq!(IntegerPartition::flag(3, 2), None);
        assert_eq!(IntegerPartition::flag(4, 1).unwrap(), ip(&[1, 1, 1, 1]));
    }
}
