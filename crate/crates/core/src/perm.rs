//! Permutations of `{1..n}` and words in the adjacent transpositions.
//!
//! Composition convention: `(u * v)(x) = u(v(x))`. A word `[i1, .., ik]` denotes the
//! product `s_{i1} s_{i2} .. s_{ik}`, so the rightmost letter acts first.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intpart::IntegerPartition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Permutation {
    /// One-line notation: `images[x - 1] = w(x)`.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {x} outside 1..={n}"
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("value {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `{1..n}` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n + 1];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle entry {x} outside 1..={n}"
                    )));
                }
                if touched[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "entry {x} appears in more than one cycle position"
                    )));
                }
                touched[x] = true;
                images[x - 1] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition `s_i = (i, i+1)`.
    pub fn adjacent(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        Permutation::from_cycles(n, &[vec![a, b]])
    }

    /// The long cycle `c = (1, 2, .., n)`.
    pub fn long_cycle(n: usize) -> Self {
        let images = (1..=n).map(|x| if x == n { 1 } else { x + 1 }).collect();
        Permutation { images }
    }

    /// The long element `w0 = n (n-1) .. 2 1`.
    pub fn long_element(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(x)` for `x` in `1..=n`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn pow(&self, e: usize) -> Permutation {
        let mut acc = Permutation::identity(self.n());
        for _ in 0..e {
            acc = self * &acc;
        }
        acc
    }

    pub fn inversions(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Disjoint cycles, each starting at its smallest element, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> IntegerPartition {
        IntegerPartition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    /// A reduced word for `w`, found by repeatedly moving the largest displaced
    /// value one step toward its home position.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.images.clone();
        let mut record = Vec::new();
        for value in (1..=w.len()).rev() {
            let mut pos = w.iter().position(|&x| x == value).unwrap();
            // pos is 0-based; value belongs at value - 1
            while pos + 1 < value {
                // right multiplication by s_{pos+1} swaps positions pos, pos+1
                w.swap(pos, pos + 1);
                record.push(pos + 1);
                pos += 1;
            }
        }
        // w * s_{j1} * .. * s_{jk} = e, hence w = s_{jk} .. s_{j1}
        record.reverse();
        Word(record)
    }

    /// Parses one-line notation (`"5 1 2 6 3 8 4 7"`, commas allowed) or cycle
    /// notation (`"(1,5,3)(2,6)"`). Cycle notation needs `n`, defaulting to the
    /// largest entry present.
    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        let trimmed = s.trim();
        let offset = s.len() - s.trim_start().len();
        if trimmed.is_empty() {
            return match n {
                Some(n) => Ok(Permutation::identity(n)),
                None => Err(Error::Parse {
                    position: 0,
                    message: "empty permutation".into(),
                }),
            };
        }
        if trimmed.starts_with('(') {
            let cycles = parse_cycles(trimmed, offset)?;
            let max = cycles.iter().flatten().copied().max().unwrap_or(0);
            let size = n.unwrap_or(max);
            if max > size {
                return Err(Error::Parse {
                    position: offset,
                    message: format!("cycle entry {max} exceeds n = {size}"),
                });
            }
            Permutation::from_cycles(size, &cycles)
        } else {
            let mut images = Vec::new();
            for (start, token) in tokens(trimmed, &[' ', ',', '\t']) {
                let value = token.parse::<usize>().map_err(|_| Error::Parse {
                    position: offset + start,
                    message: format!("expected a positive integer, found {token:?}"),
                })?;
                images.push(value);
            }
            if let Some(n) = n {
                if images.len() != n {
                    return Err(Error::SizeMismatch {
                        expected: n,
                        found: images.len(),
                    });
                }
            }
            Permutation::from_one_line(images)
        }
    }

    /// Uniformly random permutation of `{1..n}`.
    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        use rand::seq::SliceRandom;
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    /// All permutations of `{1..n}` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

fn tokens<'a>(s: &'a str, seps: &[char]) -> Vec<(usize, &'a str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        if seps.contains(&ch) {
            if let Some(st) = start.take() {
                out.push((st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out
}

fn parse_cycles(s: &str, offset: usize) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = s;
    let mut pos = offset;
    loop {
        let lead = rest.len() - rest.trim_start().len();
        rest = rest.trim_start();
        pos += lead;
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('(') {
            return Err(Error::Parse {
                position: pos,
                message: "expected '('".into(),
            });
        }
        let close = rest.find(')').ok_or(Error::Parse {
            position: pos,
            message: "unclosed '('".into(),
        })?;
        let body = &rest[1..close];
        let mut cycle = Vec::new();
        for (start, token) in tokens(body, &[',', ' ', '\t']) {
            let value = token.parse::<usize>().map_err(|_| Error::Parse {
                position: pos + 1 + start,
                message: format!("expected a positive integer, found {token:?}"),
            })?;
            cycle.push(value);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = &rest[close + 1..];
        pos += close + 1;
    }
    Ok(cycles)
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on size mismatch; use [`Permutation::compose`] for a fallible version.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutation sizes differ")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A word `s_{i1} s_{i2} .. s_{ik}` in the adjacent transpositions.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check(&self, n: usize) -> Result<()> {
        for &i in &self.0 {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    max: n.saturating_sub(1),
                });
            }
        }
        Ok(())
    }

    /// The permutation `s_{i1} .. s_{ik}` of `{1..n}`.
    pub fn product(&self, n: usize) -> Result<Permutation> {
        self.check(n)?;
        let mut images: Vec<usize> = (1..=n).collect();
        // (w s_i) swaps positions i, i+1 of the one-line notation of w
        for &i in &self.0 {
            images.swap(i - 1, i);
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
