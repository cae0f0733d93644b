//! The skein map, the star action on all set partitions, and the action of
//! `S_n` on the noncrossing span `V(n)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::perm::{Permutation, Word};
use crate::vector::NCVector;

/// `+pi` or `-pi`: the single-term values of the star action.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SignedPartition {
    pub sign: i8,
    pub partition: SetPartition,
}

impl SignedPartition {
    pub fn positive(partition: SetPartition) -> Self {
        SignedPartition { sign: 1, partition }
    }

    /// As a one-term vector; fails when the partition is crossing.
    pub fn to_vector(&self) -> Result<NCVector> {
        NCVector::term(&self.partition, self.sign as i64)
    }
}

impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { '-' } else { '+' };
        write!(f, "{s}1 * {}", self.partition)
    }
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// Moves the elements of `merged` into one new block and those of `rest` into another.
fn regroup(pi: &SetPartition, merged: &[usize], rest: &[usize]) -> SetPartition {
    let mut labels: Vec<usize> = pi.labels().iter().map(|&l| l as usize).collect();
    let fresh_a = usize::MAX - 1;
    let fresh_b = usize::MAX;
    for &x in merged {
        labels[x - 1] = fresh_a;
    }
    for &x in rest {
        labels[x - 1] = fresh_b;
    }
    SetPartition::from_labels(&labels)
}

/// The four candidate terms of the skein relation at a crossing index `i`,
/// with their signs and the sizes `k = |B_i| - 1`, `l = |B_(i+1)| - 1`.
struct SkeinTerms {
    k: usize,
    l: usize,
    pi1: SetPartition,
    pi2: SetPartition,
    pi3: SetPartition,
    pi4: SetPartition,
}

fn skein_terms(pi: &SetPartition, i: usize) -> Result<SkeinTerms> {
    check_index(pi.n(), i)?;
    if pi.is_noncrossing() || !pi.swap_adjacent(i).is_noncrossing() {
        return Err(Error::NotAlmostNoncrossing(format!("{pi} at index {i}")));
    }
    let a: Vec<usize> = pi.block_of(i).into_iter().filter(|&x| x != i).collect();
    let b: Vec<usize> = pi.block_of(i + 1).into_iter().filter(|&x| x != i + 1).collect();
    let ab: Vec<usize> = a.iter().chain(&b).copied().collect();
    let with_a: Vec<usize> = [i, i + 1].iter().chain(&a).copied().collect();
    let with_b: Vec<usize> = [i, i + 1].iter().chain(&b).copied().collect();
    Ok(SkeinTerms {
        k: a.len(),
        l: b.len(),
        pi1: pi.swap_adjacent(i),
        pi2: regroup(pi, &[i, i + 1], &ab),
        pi3: regroup(pi, &with_a, &b),
        pi4: regroup(pi, &with_b, &a),
    })
}

/// `sigma(pi)` computed from the crossing index `i`.
pub fn sigma_at(pi: &SetPartition, i: usize) -> Result<NCVector> {
    let t = skein_terms(pi, i)?;
    let mut v = NCVector::zero(pi.n());
    let one = BigInt::one();
    v.add_unchecked(t.pi1, one.clone());
    v.add_unchecked(t.pi2, one.clone());
    if t.l >= 2 {
        v.add_unchecked(t.pi3, -one.clone());
    }
    if t.k >= 2 {
        v.add_unchecked(t.pi4, -one);
    }
    Ok(v)
}

/// The skein map on an almost noncrossing partition, resolved at its smallest crossing index.
pub fn sigma(pi: &SetPartition) -> Result<NCVector> {
    let i = (1..pi.n())
        .find(|&i| pi.swap_adjacent(i).is_noncrossing())
        .filter(|_| !pi.is_noncrossing())
        .ok_or_else(|| Error::NotAlmostNoncrossing(pi.to_string()))?;
    sigma_at(pi, i)
}

/// The undegenerated four-term skein relation at crossing index `i`.
///
/// Blocks left empty by the regrouping cannot occur: `k, l >= 1` at a crossing.
pub fn sigma_tilde_at(pi: &SetPartition, i: usize) -> Result<NCVector> {
    let t = skein_terms(pi, i)?;
    let mut v = NCVector::zero(pi.n());
    let one = BigInt::one();
    debug_assert!(t.k >= 1 && t.l >= 1);
    v.add_unchecked(t.pi1, one.clone());
    v.add_unchecked(t.pi2, one.clone());
    v.add_unchecked(t.pi3, -one.clone());
    v.add_unchecked(t.pi4, -one);
    Ok(v)
}

/// `rho_i`: swap `i` and `i + 1`, negated unless one of them is a singleton.
pub fn rho(i: usize, pi: &SetPartition) -> Result<SignedPartition> {
    check_index(pi.n(), i)?;
    let free = pi.block_size_of(i) == 1 || pi.block_size_of(i + 1) == 1;
    Ok(SignedPartition {
        sign: if free { 1 } else { -1 },
        partition: pi.swap_adjacent(i),
    })
}

/// The star action along a word, rightmost letter first.
pub fn star_act_word(word: &Word, pi: &SetPartition) -> Result<SignedPartition> {
    word.check(pi.n())?;
    let mut out = SignedPartition::positive(pi.clone());
    for &i in word.letters().iter().rev() {
        let step = rho(i, &out.partition)?;
        out = SignedPartition {
            sign: out.sign * step.sign,
            partition: step.partition,
        };
    }
    Ok(out)
}

/// `w * pi = +-w(pi)`, computed along the canonical reduced word of `w`.
pub fn star_act(w: &Permutation, pi: &SetPartition) -> Result<SignedPartition> {
    if w.n() != pi.n() {
        return Err(Error::SizeMismatch {
            expected: pi.n(),
            found: w.n(),
        });
    }
    star_act_word(&w.reduced_word(), pi)
}

fn require_noncrossing(pi: &SetPartition) -> Result<()> {
    if pi.is_noncrossing() {
        Ok(())
    } else {
        Err(Error::NotNoncrossing(pi.to_string()))
    }
}

/// `tau_i` on a noncrossing partition.
pub fn tau(i: usize, pi: &SetPartition) -> Result<NCVector> {
    check_index(pi.n(), i)?;
    require_noncrossing(pi)?;
    if pi.same_block(i, i + 1) {
        return NCVector::term(pi, -1);
    }
    let swapped = pi.swap_adjacent(i);
    if swapped.is_noncrossing() {
        NCVector::basis(&swapped)
    } else {
        sigma(&swapped)
    }
}

/// `tau~_i`: like [`tau`] but crossings are resolved with the four-term relation at `i`.
pub fn tau_tilde(i: usize, pi: &SetPartition) -> Result<NCVector> {
    check_index(pi.n(), i)?;
    require_noncrossing(pi)?;
    if pi.same_block(i, i + 1) {
        return NCVector::term(pi, -1);
    }
    let swapped = pi.swap_adjacent(i);
    if swapped.is_noncrossing() {
        NCVector::basis(&swapped)
    } else {
        sigma_tilde_at(&swapped, i)
    }
}

/// Extends a generator action `op(i, basis element)` along a word, rightmost letter first.
pub fn act_word_with<F>(word: &Word, v: &NCVector, mut op: F) -> Result<NCVector>
where
    F: FnMut(usize, &SetPartition) -> Result<NCVector>,
{
    word.check(v.n())?;
    let mut out = v.clone();
    for &i in word.letters().iter().rev() {
        out = out.map_linear(|pi| op(i, pi))?;
    }
    Ok(out)
}

/// The `S_n`-action on `V(n)` along a word.
pub fn act_word(word: &Word, v: &NCVector) -> Result<NCVector> {
    act_word_with(word, v, tau)
}

/// `w.v`, computed along the canonical reduced word of `w`.
pub fn act_perm(w: &Permutation, v: &NCVector) -> Result<NCVector> {
    if w.n() != v.n() {
        return Err(Error::SizeMismatch {
            expected: v.n(),
            found: w.n(),
        });
    }
    act_word(&w.reduced_word(), v)
}

/// Closed formula for the transposition `(1, n)` on a partition without singletons:
/// the swap, `-pi` for blockmates, otherwise the rotated skein resolution.
pub fn affine_transposition(pi: &SetPartition) -> Result<NCVector> {
    let n = pi.n();
    require_noncrossing(pi)?;
    if n < 2 {
        return Err(Error::InvalidParameters("need n >= 2".into()));
    }
    if pi.same_block(1, n) {
        return NCVector::term(pi, -1);
    }
    let swapped = pi.apply_perm(&Permutation::transposition(n, 1, n)?)?;
    if swapped.is_noncrossing() {
        return NCVector::basis(&swapped);
    }
    let resolved = sigma(&swapped.rotate_by(n - 1))?;
    rotate_vector(&resolved, 1)
}

/// Rotates every term of a vector by `d` steps.
pub fn rotate_vector(v: &NCVector, d: usize) -> Result<NCVector> {
    NCVector::from_terms(v.n(), v.iter().map(|(p, c)| (c.clone(), p.rotate_by(d))))
}

/// Reflects every term of a vector.
pub fn reflect_vector(v: &NCVector) -> Result<NCVector> {
    NCVector::from_terms(v.n(), v.iter().map(|(p, c)| (c.clone(), p.reflect())))
}
