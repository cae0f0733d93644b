//! The Temperley-Lieb action at loop value `-2` on noncrossing partitions without
//! singletons, and the symmetric group modules `W(n, k, 0)` it induces via `s_i -> 1 + t_i`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::enumerate;
use crate::error::{Error, Result};
use crate::module::{add_scaled_coords, BasisAction, Coords, Space};
use crate::partition::SetPartition;
use crate::report::RunReport;
use crate::repr::{character_table, decompose, mn_character, CycleType};
use crate::vector::NCVector;

/// `scalar * partition`, the image of a basis element under a generator `t_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScaledPartition {
    pub scalar: BigInt,
    pub partition: SetPartition,
}

/// The loop value.
pub const LOOP: i64 = -2;

/// How `t_i` treats a block that contains both `i` and `i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TlRule {
    /// A closed loop only when the block is exactly `{i, i+1}`; a larger block gives zero.
    /// These operators satisfy the Temperley-Lieb relations on every `W(n, k, 0)`.
    #[default]
    Loop,
    /// `-2 pi` whenever `i` and `i + 1` are blockmates. Agrees with `Loop` on perfect
    /// matchings and breaks the commutation relations once a block has three or more elements.
    Literal,
}

/// `t_i . pi` under the default rule.
pub fn tl_act(i: usize, pi: &SetPartition) -> Result<ScaledPartition> {
    tl_act_with(TlRule::Loop, i, pi)
}

/// `t_i . pi`: merging case replaces `{i, a..}` and `{i+1, b..}` by `{i, i+1}` and
/// `{a.., b..}`; blockmates follow `rule`.
pub fn tl_act_with(rule: TlRule, i: usize, pi: &SetPartition) -> Result<ScaledPartition> {
    let n = pi.n();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    if !pi.is_noncrossing() {
        return Err(Error::NotNoncrossing(pi.to_string()));
    }
    for x in [i, i + 1] {
        if pi.block_size_of(x) == 1 {
            return Err(Error::SingletonBlock {
                partition: pi.to_string(),
                index: x,
            });
        }
    }
    if pi.same_block(i, i + 1) {
        let closed = rule == TlRule::Literal || pi.block_size_of(i) == 2;
        return Ok(ScaledPartition {
            scalar: if closed { BigInt::from(LOOP) } else { BigInt::zero() },
            partition: pi.clone(),
        });
    }
    let (li, lj) = (pi.label(i), pi.label(i + 1));
    let mut labels: Vec<usize> = pi.labels().iter().map(|&l| l as usize).collect();
    let pair = usize::MAX;
    for (x, l) in labels.iter_mut().enumerate() {
        if x + 1 == i || x + 1 == i + 1 {
            *l = pair;
        } else if *l == lj as usize {
            *l = li as usize;
        }
    }
    Ok(ScaledPartition {
        scalar: BigInt::one(),
        partition: SetPartition::from_labels(&labels),
    })
}

/// `t_i` extended linearly.
pub fn tl_act_vector(i: usize, v: &NCVector) -> Result<NCVector> {
    tl_act_vector_with(TlRule::Loop, i, v)
}

pub fn tl_act_vector_with(rule: TlRule, i: usize, v: &NCVector) -> Result<NCVector> {
    v.map_linear(|pi| {
        let t = tl_act_with(rule, i, pi)?;
        NCVector::term(&t.partition, t.scalar)
    })
}

/// `s_i . v = v + t_i . v`.
pub fn tl_sn_act(i: usize, v: &NCVector) -> Result<NCVector> {
    tl_sn_act_with(TlRule::Loop, i, v)
}

pub fn tl_sn_act_with(rule: TlRule, i: usize, v: &NCVector) -> Result<NCVector> {
    let mut out = v.clone();
    out += &tl_act_vector_with(rule, i, v)?;
    Ok(out)
}

fn w_basis(n: usize, k: usize) -> Result<Vec<SetPartition>> {
    let basis = enumerate::nc(n, Some(k), Some(0));
    if basis.is_empty() {
        return Err(Error::EmptySpace(format!("W({n}, {k}, 0)")));
    }
    Ok(basis)
}

/// The module `W(n, k, 0)`.
pub fn w_module(n: usize, k: usize) -> Result<BasisAction> {
    w_module_with(TlRule::Loop, n, k)
}

/// The operators `1 + t_i` on `NC(n, k, 0)` under `rule`.
pub fn w_module_with(rule: TlRule, n: usize, k: usize) -> Result<BasisAction> {
    BasisAction::build(n, w_basis(n, k)?, |i, pi| tl_sn_act_with(rule, i, &NCVector::basis(pi)?))
}

/// The operators `t_i` themselves on `NC(n, k, 0)`.
pub fn tl_operators(rule: TlRule, n: usize, k: usize) -> Result<BasisAction> {
    BasisAction::build(n, w_basis(n, k)?, |i, pi| tl_act_vector_with(rule, i, &NCVector::basis(pi)?))
}

fn apply(m: &BasisAction, word: &[usize], v: &Coords) -> Coords {
    word.iter().rev().fold(v.clone(), |acc, &i| m.generator(i).apply(&acc))
}

fn scaled(v: &Coords, c: i64) -> Coords {
    let mut out = Coords::new();
    add_scaled_coords(&mut out, v, c);
    out
}

/// The defining relations of `TL_n(-2)` on every basis vector of `NC(n, k, 0)`.
pub fn verify_tl_relations(rule: TlRule, n: usize, k: usize) -> Result<RunReport> {
    let t = tl_operators(rule, n, k)?;
    let mut report = RunReport::new("tl-relations", &["relation", "checked"])
        .param("n", n)
        .param("k", k)
        .param("rule", format!("{rule:?}").to_lowercase());
    let units: Vec<Coords> = (0..t.dim()).map(|j| t.unit(j)).collect();
    let mut check = |name: String, lhs: &[usize], rhs: &[usize], factor: i64| {
        let ok = units.iter().all(|e| apply(&t, lhs, e) == scaled(&apply(&t, rhs, e), factor));
        report.push(vec![name, units.len().to_string()], ok);
    };
    for i in 1..n {
        check(format!("t{i}^2 = -2 t{i}"), &[i, i], &[i], LOOP);
        if i + 1 < n {
            check(format!("t{i} t{} t{i} = t{i}", i + 1), &[i, i + 1, i], &[i], 1);
            check(format!("t{} t{i} t{} = t{}", i + 1, i + 1, i + 1), &[i + 1, i, i + 1], &[i + 1], 1);
        }
        for j in i + 2..n {
            check(format!("t{i} t{j} = t{j} t{i}"), &[i, j], &[j, i], 1);
        }
    }
    Ok(report)
}

/// The alternating sum over `S_{i, i+1, i+2}` acts as zero on `W(n, k, 0)`.
pub fn verify_alternating_kernel(n: usize, k: usize) -> Result<RunReport> {
    let w = w_module(n, k)?;
    let mut report = RunReport::new("tl-kernel", &["i", "checked"]).param("n", n).param("k", k);
    let terms: [(&[usize], i64); 6] = [
        (&[], 1),
        (&[1], -1),
        (&[2], -1),
        (&[1, 2], 1),
        (&[2, 1], 1),
        (&[1, 2, 1], -1),
    ];
    for i in 1..n.saturating_sub(1) {
        let ok = (0..w.dim()).all(|j| {
            let e = w.unit(j);
            let mut acc = Coords::new();
            for (word, sign) in terms {
                let shifted: Vec<usize> = word.iter().map(|x| x + i - 1).collect();
                add_scaled_coords(&mut acc, &apply(&w, &shifted, &e), sign);
            }
            acc.is_empty()
        });
        report.push(vec![i.to_string(), w.dim().to_string()], ok);
    }
    Ok(report)
}

/// Basis indices with at least `d` two-element blocks.
fn doubleton_level(m: &BasisAction, d: usize) -> Vec<usize> {
    (0..m.dim()).filter(|&j| m.basis()[j].doubleton_count() >= d).collect()
}

/// Each span `W(n, k, 0, >= d)` is stable under every `s_i`.
pub fn doubleton_filtration_check(n: usize, k: usize) -> Result<RunReport> {
    let w = w_module(n, k)?;
    let mut report = RunReport::new("tl-filtration", &["d", "dim", "stable"]).param("n", n).param("k", k);
    let top = w.basis().iter().map(SetPartition::doubleton_count).max().unwrap_or(0);
    for d in 0..=top {
        let level = doubleton_level(&w, d);
        let stable = w.is_stable(&level);
        report.push(vec![d.to_string(), level.len().to_string(), stable.to_string()], stable);
    }
    let monotone = (0..w.dim()).all(|j| {
        let before = w.basis()[j].doubleton_count();
        (1..n).all(|i| {
            w.generator(i).cols[j]
                .iter()
                .all(|(r, _)| w.basis()[*r].doubleton_count() >= before)
        })
    });
    report.push(vec!["monotone".into(), w.dim().to_string(), monotone.to_string()], monotone);
    Ok(report)
}

/// Whether the span of partitions with at least one doubleton is a proper nonzero submodule.
pub fn doubleton_span_is_proper_submodule(n: usize, k: usize) -> Result<bool> {
    let w = w_module(n, k)?;
    let level = doubleton_level(&w, 1);
    Ok(!level.is_empty() && level.len() < w.dim() && w.is_stable(&level))
}

/// Side-by-side characters of `V(n, k, 0)` and `W(n, k, 0)`, plus the structural checks:
/// equal generator matrices when `n = 2k`, and only shapes with at most two rows in `W`.
pub fn compare_modules(n: usize, k: usize) -> Result<RunReport> {
    if 2 * k > n {
        return Err(Error::InvalidParameters(format!("need 2k <= n, got n = {n}, k = {k}")));
    }
    let v = BasisAction::skein(Space::new(n, Some(k), Some(0)))?;
    let w = w_module(n, k)?;
    let chi_v = character_table(&v)?;
    let chi_w = character_table(&w)?;
    let equal = chi_v == chi_w;
    let shapes_w = decompose(n, &chi_w)?;
    let shape_names: Vec<String> = shapes_w.iter().map(|(l, m)| format!("{m}x{l}")).collect();
    let mut report = RunReport::new("tl-compare", &["check", "V", "W"])
        .param("n", n)
        .param("k", k)
        .param("characters_equal", equal)
        .param("W_shapes", shape_names.join("+"));
    for ((mu, a), (_, b)) in chi_v.iter().zip(&chi_w) {
        report.push(vec![format!("class {mu}"), a.to_string(), b.to_string()], true);
    }
    let two_rows = shapes_w.iter().all(|(l, m)| l.len() <= 2 && m > &BigInt::zero());
    report.push(vec!["W shapes have <= 2 rows".into(), "-".into(), two_rows.to_string()], two_rows);
    if n > 2 * k {
        let proper = doubleton_span_is_proper_submodule(n, k)?;
        report.push(
            vec!["doubleton span is a proper submodule".into(), "-".into(), proper.to_string()],
            true,
        );
    } else {
        let same = (1..n).all(|i| v.generator(i) == w.generator(i));
        report.push(vec!["generator matrices equal".into(), "-".into(), same.to_string()], same);
    }
    Ok(report)
}

/// `<chi_W, chi^lambda>` for one shape.
pub fn multiplicity_in_w(n: usize, k: usize, lambda: &crate::IntegerPartition) -> Result<BigInt> {
    let chi = character_table(&w_module(n, k)?)?;
    crate::repr::inner_product(n, &chi, &|mu: &CycleType| mn_character(lambda, mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::tau;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn tl_examples() {
        let pi = sp("1,2/3,4");
        assert_eq!(
            tl_act(1, &pi).unwrap(),
            ScaledPartition { scalar: BigInt::from(-2), partition: pi.clone() }
        );
        assert_eq!(
            tl_act(2, &pi).unwrap(),
            ScaledPartition { scalar: BigInt::one(), partition: sp("2,3/1,4") }
        );
        assert!(matches!(tl_act(1, &sp("1/2,3,4")), Err(Error::SingletonBlock { index: 1, .. })));
        assert!(tl_act(4, &pi).is_err());
    }

    #[test]
    fn tl_square_is_loop_multiple() {
        for pi in enumerate::nc(6, Some(2), Some(0)) {
            for i in 1..6 {
                let v = NCVector::basis(&pi).unwrap();
                let once = tl_act_vector(i, &v).unwrap();
                let twice = tl_act_vector(i, &once).unwrap();
                assert_eq!(twice, once.scaled(&BigInt::from(LOOP)));
                assert_eq!(tl_sn_act(i, &tl_sn_act(i, &v).unwrap()).unwrap(), v);
            }
        }
    }

    #[test]
    fn perfect_matchings_agree_with_skein() {
        for k in 1..=3 {
            for pi in enumerate::nc(2 * k, Some(k), Some(0)) {
                for i in 1..2 * k {
                    let v = NCVector::basis(&pi).unwrap();
                    assert_eq!(tl_sn_act(i, &v).unwrap(), tau(i, &pi).unwrap());
                }
            }
        }
    }

    #[test]
    fn relations_and_kernel() {
        for (n, k) in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3)] {
            let r = verify_tl_relations(TlRule::Loop, n, k).unwrap();
            assert!(r.passed(), "{}", r.render());
        }
        assert!(verify_alternating_kernel(6, 2).unwrap().passed());
    }

    #[test]
    fn six_two_is_reducible() {
        assert!(doubleton_span_is_proper_submodule(6, 2).unwrap());
        let r = doubleton_filtration_check(6, 2).unwrap();
        assert!(r.passed(), "{}", r.render());
        let c = compare_modules(6, 2).unwrap();
        assert!(c.passed(), "{}", c.render());
        assert!(c.parameters.contains(&("characters_equal".into(), "false".into())));
    }

    #[test]
    fn larger_block_gives_zero() {
        let pi = sp("1,2,5,6/3,4");
        assert!(tl_act(1, &pi).unwrap().scalar.is_zero());
        assert_eq!(tl_act_with(TlRule::Literal, 1, &pi).unwrap().scalar, BigInt::from(LOOP));
        assert!(tl_sn_act(1, &NCVector::basis(&pi).unwrap()).unwrap() == NCVector::basis(&pi).unwrap());
    }

    #[test]
    fn literal_rule_breaks_commutation() {
        let v = NCVector::basis(&sp("1,4,5,6/2,3")).unwrap();
        let lit = |i, v: &NCVector| tl_act_vector_with(TlRule::Literal, i, v).unwrap();
        assert_ne!(lit(1, &lit(3, &v)), lit(3, &lit(1, &v)));
        assert!(!verify_tl_relations(TlRule::Literal, 6, 2).unwrap().passed());
        for k in 1..=4 {
            assert!(verify_tl_relations(TlRule::Literal, 2 * k, k).unwrap().passed());
        }
    }
}
