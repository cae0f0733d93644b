//! The equivariant projection from all set partitions onto `V(n)`.

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::perm::Permutation;
use crate::skein::{act_perm, star_act};
use crate::vector::NCVector;

/// `p(pi) = w^-1 . (w * pi)` where `w` sends `pi` to its canonical interval partition.
pub fn project(pi: &SetPartition) -> Result<NCVector> {
    let (w, _) = pi.conjugator_to_canonical();
    project_via(pi, &w)
}

/// `w^-1 . (w * pi)` for any `w` with `w(pi)` noncrossing.
pub fn project_via(pi: &SetPartition, w: &Permutation) -> Result<NCVector> {
    let signed = star_act(w, pi)?;
    if !signed.partition.is_noncrossing() {
        return Err(Error::NotNoncrossing(format!(
            "{} (image of {pi} under {w})",
            signed.partition
        )));
    }
    act_perm(&w.inverse(), &signed.to_vector()?)
}

/// Every `w` in `S_n` with `w(pi)` noncrossing. Exhaustive, so only for small `n`.
pub fn admissible_conjugators(pi: &SetPartition) -> Vec<Permutation> {
    Permutation::all(pi.n())
        .into_iter()
        .filter(|w| pi.apply_perm(w).is_ok_and(|p| p.is_noncrossing()))
        .collect()
}

/// Projects through every admissible `w`; returns the canonical projection and
/// the conjugators that disagree with it.
pub fn check_all_paths(pi: &SetPartition) -> Result<(NCVector, Vec<Permutation>)> {
    let canonical = project(pi)?;
    let mut bad = Vec::new();
    for w in admissible_conjugators(pi) {
        if project_via(pi, &w)? != canonical {
            bad.push(w);
        }
    }
    Ok((canonical, bad))
}

/// Generators of the stabilizer of `pi_lambda`: adjacent transpositions inside each
/// block, and swaps of consecutive equal-size blocks keeping relative order.
pub fn stabilizer_generators(lambda: &crate::IntegerPartition) -> Vec<Permutation> {
    let n = lambda.size();
    let mut gens = Vec::new();
    let mut start = 1;
    let parts = lambda.parts();
    for (b, &p) in parts.iter().enumerate() {
        for i in start..start + p - 1 {
            gens.push(Permutation::adjacent(n, i).expect("index inside [n]"));
        }
        if b + 1 < parts.len() && parts[b + 1] == p {
            let mut images: Vec<usize> = (1..=n).collect();
            for j in 0..p {
                images[start + j - 1] = start + p + j;
                images[start + p + j - 1] = start + j;
            }
            gens.push(Permutation::from_one_line(images).expect("block swap is a bijection"));
        }
        start += p;
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate;
    use crate::skein::sigma;
    use crate::{IntegerPartition, Word};
    use num_bigint::BigInt;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn identity_on_noncrossing() {
        for pi in enumerate::noncrossing(5) {
            assert_eq!(project(&pi).unwrap(), NCVector::basis(&pi).unwrap());
            assert_eq!(
                project_via(&pi, &Permutation::identity(5)).unwrap(),
                NCVector::basis(&pi).unwrap()
            );
        }
    }

    #[test]
    fn negated_skein_on_example() {
        let pi = sp("1,2,5/3/4,6");
        let expected = NCVector::from_terms(
            6,
            [(-1, "1,2,6/3/4,5"), (-1, "1,2,4/3/5,6"), (1, "1,2/3/4,5,6")]
                .iter()
                .map(|&(c, p)| (BigInt::from(c), sp(p))),
        )
        .unwrap();
        assert_eq!(project(&pi).unwrap(), expected);
        assert_eq!(project(&pi).unwrap(), -sigma(&pi).unwrap());
    }

    #[test]
    fn via_rejects_crossing_images() {
        let pi = sp("1,3/2,4");
        assert!(project_via(&pi, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn worked_example_short_word() {
        let pi = sp("1,4,8/2,3,5,7/6");
        let w = Word::new(vec![2, 3]).product(8).unwrap();
        assert_eq!(pi.apply_perm(&w).unwrap(), sp("1,2,8/3,4,5,7/6"));
        let signed = star_act(&w, &pi).unwrap();
        assert_eq!(signed.sign, 1);
        let expected = crate::skein::act_word(&Word::new(vec![3, 2]), &signed.to_vector().unwrap()).unwrap();
        assert_eq!(project_via(&pi, &w).unwrap(), expected);
        assert_eq!(project(&pi).unwrap(), expected);
    }

    #[test]
    fn stabilizer_generators_fix_pi_lambda() {
        for n in 1..=7 {
            for lambda in IntegerPartition::all(n) {
                let base = SetPartition::pi_lambda(&lambda);
                for g in stabilizer_generators(&lambda) {
                    assert_eq!(base.apply_perm(&g).unwrap(), base, "{lambda} {g}");
                }
            }
        }
        let gens = stabilizer_generators(&IntegerPartition::new(vec![2, 2, 1]).unwrap());
        assert_eq!(gens.len(), 3);
    }
}
