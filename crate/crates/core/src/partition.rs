//! Set partitions of `[n]` and their crossing structure.
//!
//! A partition is stored as its restricted growth string: element `x` carries the
//! index of its block, blocks being numbered in order of their minimum elements.
//! This is a canonical form, so derived equality, hashing and ordering agree with
//! equality of partitions. The total order is lexicographic on that string.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intpart::IntegerPartition;
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SetPartition {
    labels: Vec<u8>,
}

/// Where a partition sits relative to the noncrossing ones.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CrossingClass {
    Noncrossing,
    /// Crossing, but `s_i(pi)` is noncrossing exactly for the listed `i`.
    AlmostNoncrossing(Vec<usize>),
    Crossing,
}

impl SetPartition {
    /// Builds a partition from arbitrary per-element labels (element `x` gets `labels[x-1]`).
    pub fn from_labels<T: Copy + Eq>(labels: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let mut out = Vec::with_capacity(labels.len());
        for &l in labels {
            let idx = match seen.iter().position(|&s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(l);
                    seen.len() - 1
                }
            };
            out.push(idx as u8);
        }
        SetPartition { labels: out }
    }

    pub fn new(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        if n > u8::MAX as usize {
            return Err(Error::InvalidPartition(format!("n = {n} is too large")));
        }
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} outside 1..={n}"
                    )));
                }
                if labels[x - 1] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} appears twice"
                    )));
                }
                labels[x - 1] = b;
            }
        }
        if let Some(missing) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "element {} is missing",
                missing + 1
            )));
        }
        Ok(SetPartition::from_labels(&labels))
    }

    /// Like [`SetPartition::new`] with `n` taken to be the largest element.
    pub fn from_blocks(blocks: &[Vec<usize>]) -> Result<Self> {
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        SetPartition::new(n, blocks)
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition {
            labels: (0..n as u8).collect(),
        }
    }

    pub fn one_block(n: usize) -> Self {
        SetPartition { labels: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// The restricted growth string.
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    #[inline]
    pub fn label(&self, x: usize) -> u8 {
        self.labels[x - 1]
    }

    #[inline]
    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.labels[x - 1] == self.labels[y - 1]
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Blocks in canonical order: sorted by minimum, elements ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(i + 1);
        }
        blocks
    }

    /// `B_x(pi)`, the block containing `x`.
    pub fn block_of(&self, x: usize) -> Vec<usize> {
        let l = self.labels[x - 1];
        (1..=self.n()).filter(|&y| self.labels[y - 1] == l).collect()
    }

    pub fn block_size_of(&self, x: usize) -> usize {
        let l = self.labels[x - 1];
        self.labels.iter().filter(|&&y| y == l).count()
    }

    fn block_sizes_by_label(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.block_count()];
        for &l in &self.labels {
            sizes[l as usize] += 1;
        }
        sizes
    }

    pub fn singleton_count(&self) -> usize {
        self.block_sizes_by_label().iter().filter(|&&s| s == 1).count()
    }

    pub fn doubleton_count(&self) -> usize {
        self.block_sizes_by_label().iter().filter(|&&s| s == 2).count()
    }

    /// Block sizes sorted decreasingly.
    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::from_unsorted(self.block_sizes_by_label())
    }

    /// Number of edges at `x` in the disk picture: 0, 1 or 2.
    pub fn valence(&self, x: usize) -> Result<usize> {
        if x == 0 || x > self.n() {
            return Err(Error::IndexOutOfRange {
                index: x,
                max: self.n(),
            });
        }
        Ok(match self.block_size_of(x) {
            1 => 0,
            2 => 1,
            _ => 2,
        })
    }

    /// `w(pi)`: `w(x) ~ w(y)` in `w(pi)` iff `x ~ y` in `pi`.
    pub fn apply_perm(&self, w: &Permutation) -> Result<Self> {
        if w.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: w.n(),
            });
        }
        let mut labels = vec![0u8; self.n()];
        for x in 1..=self.n() {
            labels[w.apply(x) - 1] = self.labels[x - 1];
        }
        Ok(SetPartition::from_labels(&labels))
    }

    /// `s_i(pi)`, swapping `i` and `i + 1`. Requires `1 <= i < n`.
    pub fn swap_adjacent(&self, i: usize) -> Self {
        let mut labels = self.labels.clone();
        labels.swap(i - 1, i);
        SetPartition::from_labels(&labels)
    }

    /// Rotation `x -> x + 1 (mod n)`, the image under the long cycle.
    pub fn rotate(&self) -> Self {
        let n = self.n();
        let mut labels = vec![0u8; n];
        for x in 0..n {
            labels[(x + 1) % n] = self.labels[x];
        }
        SetPartition::from_labels(&labels)
    }

    pub fn rotate_by(&self, d: usize) -> Self {
        let n = self.n();
        if n == 0 {
            return self.clone();
        }
        let mut labels = vec![0u8; n];
        for x in 0..n {
            labels[(x + d) % n] = self.labels[x];
        }
        SetPartition::from_labels(&labels)
    }

    /// Reflection `x -> n + 1 - x`, the image under the long element.
    pub fn reflect(&self) -> Self {
        let mut labels = self.labels.clone();
        labels.reverse();
        SetPartition::from_labels(&labels)
    }

    /// No `a < b < c < d` with `a ~ c`, `b ~ d` in different blocks.
    ///
    /// Checks pairwise interleaving of arcs joining consecutive blockmates; two
    /// such arcs cross exactly when the partition has a crossing.
    pub fn is_noncrossing(&self) -> bool {
        let n = self.n();
        // next[x] = next element of x's block, or 0
        let mut next = vec![0usize; n];
        let mut last: Vec<Option<usize>> = vec![None; self.block_count()];
        for x in 0..n {
            let l = self.labels[x] as usize;
            if let Some(prev) = last[l] {
                next[prev] = x;
            }
            last[l] = Some(x);
        }
        for a in 0..n {
            let c = next[a];
            if c == 0 {
                continue;
            }
            for b in a + 1..c {
                let d = next[b];
                if d > c {
                    return false;
                }
            }
        }
        true
    }

    /// The indices `i` with `s_i(pi)` noncrossing.
    pub fn noncrossing_swaps(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.swap_adjacent(i).is_noncrossing())
            .collect()
    }

    pub fn classify(&self) -> CrossingClass {
        if self.is_noncrossing() {
            return CrossingClass::Noncrossing;
        }
        let swaps = self.noncrossing_swaps();
        if swaps.is_empty() {
            CrossingClass::Crossing
        } else {
            CrossingClass::AlmostNoncrossing(swaps)
        }
    }

    /// `pi_lambda`: consecutive intervals of lengths `lambda_1, lambda_2, ..`.
    pub fn pi_lambda(lambda: &IntegerPartition) -> Self {
        let mut labels = Vec::with_capacity(lambda.size());
        for (b, &p) in lambda.parts().iter().enumerate() {
            labels.extend(std::iter::repeat(b as u8).take(p));
        }
        SetPartition { labels }
    }

    /// A permutation `w` with `w(pi) = pi_lambda`, where `lambda` is the shape of `pi`.
    ///
    /// Blocks are ordered by size (descending, ties by minimum element) and the
    /// `j`-th block is sent order-preservingly onto the `j`-th interval.
    pub fn conjugator_to_canonical(&self) -> (Permutation, IntegerPartition) {
        let mut blocks = self.blocks();
        blocks.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        let mut images = vec![0; self.n()];
        let mut next = 1;
        for block in &blocks {
            for &x in block {
                images[x - 1] = next;
                next += 1;
            }
        }
        let lambda = IntegerPartition::from_unsorted(blocks.iter().map(Vec::len).collect());
        let w = Permutation::from_one_line(images).expect("bijection by construction");
        (w, lambda)
    }

    /// Parses `"1,3,4/2,7/5/6"`; blocks and elements may come in any order.
    pub fn parse(s: &str) -> Result<Self> {
        let offset = s.len() - s.trim_start().len();
        let body = s.trim();
        if body.is_empty() {
            return Ok(SetPartition { labels: Vec::new() });
        }
        let body = body.strip_prefix('{').map(|b| b.strip_suffix('}').unwrap_or(b)).unwrap_or(body);
        let mut blocks = Vec::new();
        let mut pos = offset;
        for chunk in body.split('/') {
            let mut block = Vec::new();
            let mut cursor = pos;
            for token in chunk.split(',') {
                let lead = token.len() - token.trim_start().len();
                let t = token.trim();
                if t.is_empty() {
                    return Err(Error::Parse {
                        position: cursor + lead,
                        message: "empty element".into(),
                    });
                }
                let x = t.parse::<usize>().map_err(|_| Error::Parse {
                    position: cursor + lead,
                    message: format!("expected a positive integer, found {t:?}"),
                })?;
                if x == 0 {
                    return Err(Error::Parse {
                        position: cursor + lead,
                        message: "elements start at 1".into(),
                    });
                }
                block.push(x);
                cursor += token.len() + 1;
            }
            blocks.push(block);
            pos += chunk.len() + 1;
        }
        SetPartition::from_blocks(&blocks).map_err(|e| Error::Parse {
            position: offset,
            message: e.to_string(),
        })
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", blocks.join("/"))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SetPartition::parse(s)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(deserializer)?;
        SetPartition::from_blocks(&blocks).map_err(serde::de::Error::custom)
    }
}
