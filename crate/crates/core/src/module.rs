//! Finite-dimensional modules spanned by noncrossing partitions, with the
//! generators `s_1, .., s_(n-1)` stored as sparse integer matrices.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use rayon::prelude::*;

use crate::enumerate;
use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::perm::{Permutation, Word};
use crate::repr::IntMatrix;
use crate::skein::{tau, tau_tilde};
use crate::vector::NCVector;

/// A subspace `V(n, k, s)` of `V(n)`; `None` leaves the statistic free.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    pub n: usize,
    pub k: Option<usize>,
    pub s: Option<usize>,
}

impl Space {
    pub fn new(n: usize, k: Option<usize>, s: Option<usize>) -> Self {
        Space { n, k, s }
    }

    pub fn basis(&self) -> Vec<SetPartition> {
        enumerate::nc(self.n, self.k, self.s)
    }

    pub fn describe(&self) -> String {
        let show = |x: Option<usize>| x.map_or("*".to_string(), |v| v.to_string());
        format!("V({}, {}, {})", self.n, show(self.k), show(self.s))
    }
}

/// Sparse coordinates: basis index to nonzero coefficient.
pub type Coords = BTreeMap<usize, BigInt>;

/// Column `j` lists the nonzero entries `(row, value)` of the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub dim: usize,
    pub cols: Vec<Vec<(usize, BigInt)>>,
}

impl SparseMatrix {
    pub fn apply(&self, v: &Coords) -> Coords {
        let mut out = Coords::new();
        for (j, x) in v {
            for (r, c) in &self.cols[*j] {
                add_coord(&mut out, *r, c * x);
            }
        }
        out
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.dim, self.dim);
        for (j, col) in self.cols.iter().enumerate() {
            for (r, c) in col {
                m.set(*r, j, c.clone());
            }
        }
        m
    }
}

/// Adds `c` at index `r`, dropping the entry if it cancels.
pub fn add_coord(v: &mut Coords, r: usize, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match v.entry(r) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// `acc += scale * v`.
pub fn add_scaled_coords(acc: &mut Coords, v: &Coords, scale: i64) {
    for (r, c) in v {
        add_coord(acc, *r, c * scale);
    }
}

/// A basis together with the matrices of the adjacent transpositions.
#[derive(Clone, Debug)]
pub struct BasisAction {
    n: usize,
    basis: Vec<SetPartition>,
    index: HashMap<SetPartition, usize>,
    generators: Vec<SparseMatrix>,
}

impl BasisAction {
    /// Builds the action from `op(i, basis element)`, which must stay inside the span.
    pub fn build<F>(n: usize, basis: Vec<SetPartition>, op: F) -> Result<Self>
    where
        F: Fn(usize, &SetPartition) -> Result<NCVector> + Sync,
    {
        if basis.is_empty() {
            return Err(Error::EmptySpace(format!("n = {n}")));
        }
        let index: HashMap<SetPartition, usize> =
            basis.iter().cloned().enumerate().map(|(j, p)| (p, j)).collect();
        let dim = basis.len();
        let generators = (1..n)
            .map(|i| {
                let cols: Result<Vec<Vec<(usize, BigInt)>>> = basis
                    .par_iter()
                    .map(|pi| {
                        let image = op(i, pi)?;
                        image
                            .iter()
                            .map(|(p, c)| {
                                index.get(p).map(|&r| (r, c.clone())).ok_or_else(|| {
                                    Error::InvalidParameters(format!(
                                        "s_{i} sends {pi} outside the span (term {p})"
                                    ))
                                })
                            })
                            .collect()
                    })
                    .collect();
                cols.map(|cols| SparseMatrix { dim, cols })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BasisAction {
            n,
            basis,
            index,
            generators,
        })
    }

    /// `V(n, k, s)` under the skein action.
    pub fn skein(space: Space) -> Result<Self> {
        let basis = space.basis();
        if basis.is_empty() {
            return Err(Error::EmptySpace(space.describe()));
        }
        BasisAction::build(space.n, basis, tau)
    }

    /// Noncrossing partitions with `k` blocks and at least `s` singletons, under the
    /// four-term skein action.
    pub fn skein_tilde(n: usize, k: usize, min_singletons: usize) -> Result<Self> {
        let basis: Vec<SetPartition> = enumerate::nc(n, Some(k), None)
            .into_iter()
            .filter(|p| p.singleton_count() >= min_singletons)
            .collect();
        if basis.is_empty() {
            return Err(Error::EmptySpace(format!(
                "n = {n}, k = {k}, at least {min_singletons} singletons"
            )));
        }
        BasisAction::build(n, basis, tau_tilde)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SetPartition] {
        &self.basis
    }

    pub fn index_of(&self, pi: &SetPartition) -> Option<usize> {
        self.index.get(pi).copied()
    }

    /// Matrix of `s_i`, `1 <= i < n`.
    pub fn generator(&self, i: usize) -> &SparseMatrix {
        &self.generators[i - 1]
    }

    pub fn unit(&self, j: usize) -> Coords {
        Coords::from([(j, BigInt::one())])
    }

    pub fn coords(&self, v: &NCVector) -> Result<Coords> {
        let mut out = Coords::new();
        for (p, c) in v.iter() {
            let j = self
                .index_of(p)
                .ok_or_else(|| Error::InvalidParameters(format!("{p} is outside the span")))?;
            out.insert(j, c.clone());
        }
        Ok(out)
    }

    pub fn vector(&self, coords: &Coords) -> NCVector {
        let mut v = NCVector::zero(self.n);
        for (j, c) in coords {
            v.add_unchecked(self.basis[*j].clone(), c.clone());
        }
        v
    }

    /// Applies a word, rightmost letter first.
    pub fn apply_word(&self, word: &Word, v: &Coords) -> Result<Coords> {
        word.check(self.n)?;
        let mut out = v.clone();
        for &i in word.letters().iter().rev() {
            out = self.generator(i).apply(&out);
        }
        Ok(out)
    }

    pub fn apply_perm(&self, w: &Permutation, v: &Coords) -> Result<Coords> {
        self.check_perm(w)?;
        self.apply_word(&w.reduced_word(), v)
    }

    fn check_perm(&self, w: &Permutation) -> Result<()> {
        if w.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: w.n(),
            });
        }
        Ok(())
    }

    /// The representing matrix of `w`; column `j` is the image of basis vector `j`.
    pub fn matrix(&self, w: &Permutation) -> Result<IntMatrix> {
        self.check_perm(w)?;
        let word = w.reduced_word();
        let cols: Vec<Coords> = (0..self.dim())
            .into_par_iter()
            .map(|j| self.apply_word(&word, &self.unit(j)))
            .collect::<Result<_>>()?;
        let mut m = IntMatrix::zeros(self.dim(), self.dim());
        for (j, col) in cols.into_iter().enumerate() {
            for (r, c) in col {
                m.set(r, j, c);
            }
        }
        Ok(m)
    }

    /// Trace of the representing matrix of `w`.
    pub fn trace(&self, w: &Permutation) -> Result<BigInt> {
        self.check_perm(w)?;
        let word = w.reduced_word();
        let diag: Vec<BigInt> = (0..self.dim())
            .into_par_iter()
            .map(|j| {
                self.apply_word(&word, &self.unit(j))
                    .map(|col| col.get(&j).cloned().unwrap_or_default())
            })
            .collect::<Result<_>>()?;
        Ok(diag.into_iter().sum())
    }

    /// The Coxeter relations of `S_n` checked on every basis vector, one entry per relation:
    /// `(name, holds)`.
    pub fn coxeter_relations(&self) -> Vec<(String, bool)> {
        let holds = |lhs: &[usize], rhs: &[usize]| {
            (0..self.dim()).into_par_iter().all(|j| {
                let e = self.unit(j);
                let run = |w: &[usize]| w.iter().rev().fold(e.clone(), |acc, &i| self.generator(i).apply(&acc));
                run(lhs) == run(rhs)
            })
        };
        let mut out = Vec::new();
        for i in 1..self.n {
            out.push((format!("s{i}^2 = e"), holds(&[i, i], &[])));
            if i + 1 < self.n {
                out.push((
                    format!("s{i} s{} s{i} = s{} s{i} s{}", i + 1, i + 1, i + 1),
                    holds(&[i, i + 1, i], &[i + 1, i, i + 1]),
                ));
            }
            for j in i + 2..self.n {
                out.push((format!("s{i} s{j} = s{j} s{i}"), holds(&[i, j], &[j, i])));
            }
        }
        out
    }

    /// Whether the span of the listed basis vectors is stable under every generator.
    pub fn is_stable(&self, subset: &[usize]) -> bool {
        let mut inside = vec![false; self.dim()];
        for &j in subset {
            inside[j] = true;
        }
        self.generators.iter().all(|g| {
            subset
                .iter()
                .all(|&j| g.cols[j].iter().all(|(r, _)| inside[*r]))
        })
    }
}
